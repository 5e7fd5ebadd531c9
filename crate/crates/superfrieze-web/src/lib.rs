//! Browser bindings: string in, string out. Each function returns either a
//! rendered result or a line starting with `error:`.

use superfrieze::continuants::{self, ContinuantSpec, Family};
use superfrieze::expr::parse_list;
use superfrieze::hill::{HillCoefficients, HillSystem};
use superfrieze::{SuperScalar, Superfrieze};
use wasm_bindgen::prelude::wasm_bindgen;

fn expressions(what: &str, text: &str) -> Result<Vec<SuperScalar>, String> {
    parse_list(text).map_err(|e| format!("{what}: {e}"))
}

fn coefficients(a: &str, beta: &str) -> Result<HillCoefficients, String> {
    let a = expressions("a", a)?;
    let beta = expressions("beta", beta)?;
    HillCoefficients::with_start(0, a, beta).map_err(|e| e.to_string())
}

fn or_error(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

/// Staggered superfrieze with first rows `a`, `beta` (comma separated),
/// followed by the closure verdict.
#[wasm_bindgen]
#[must_use]
pub fn frieze(a: &str, beta: &str) -> String {
    or_error((|| {
        let f = Superfrieze::from_first_rows(&coefficients(a, beta)?).map_err(|e| e.to_string())?;
        let verdict = if f.check_closure() { "closed" } else { "not closed" };
        Ok(format!("{}\nwidth {}, period {}: {verdict}\n", f.render(), f.width(), f.period()))
    })())
}

/// Symbolic supercontinuant of `family` (even, odd, bracket) and size `n`
/// with its number of terms.
#[wasm_bindgen]
#[must_use]
pub fn continuant(family: &str, n: usize) -> String {
    or_error((|| {
        let family: Family = family.parse().map_err(|e: continuants::ContinuantError| e.to_string())?;
        let spec = ContinuantSpec::symbolic(family, n).map_err(|e| e.to_string())?;
        let value = continuants::supercontinuant_recurrence(&spec);
        Ok(format!("{value}\n\n{} terms\n", value.term_count()))
    })())
}

/// Monodromy of the Hill equation with coefficients `a`, `beta` and
/// whether it equals `diag(-1, -1, 1)`.
#[wasm_bindgen]
#[must_use]
pub fn monodromy(a: &str, beta: &str) -> String {
    or_error((|| {
        let sys = HillSystem::new(coefficients(a, beta)?).map_err(|e| e.to_string())?;
        let m = sys.monodromy();
        Ok(format!("{m}\nantiperiodic solutions: {}\n", sys.satisfies_hill_condition()))
    })())
}
