/* tslint:disable */
/* eslint-disable */

/**
 * Symbolic supercontinuant of `family` (even, odd, bracket) and size `n`
 * with its number of terms.
 */
export function continuant(family: string, n: number): string;

/**
 * Staggered superfrieze with first rows `a`, `beta` (comma separated),
 * followed by the closure verdict.
 */
export function frieze(a: string, beta: string): string;

/**
 * Monodromy of the Hill equation with coefficients `a`, `beta` and
 * whether it equals `diag(-1, -1, 1)`.
 */
export function monodromy(a: string, beta: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly continuant: (a: number, b: number, c: number) => [number, number];
    readonly frieze: (a: number, b: number, c: number, d: number) => [number, number];
    readonly monodromy: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
