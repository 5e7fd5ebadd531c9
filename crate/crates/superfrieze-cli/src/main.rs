//! `superfrieze`: batch front end for superfriezes, Hill equations and
//! supercontinuants.
//!
//! Expressions use the grammar of `superfrieze::expr`: sums of products of
//! rational numbers and generators such as `a1`, `b2`, `x`, `xi`, with `^`
//! for integer powers and `/` for division by a monomial. Names `b`, `w` and
//! Greek letter names are odd; all other names are even.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on invalid input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use superfrieze::continuants::{self, ContinuantSpec, Family};
use superfrieze::expr::{parse_list, ParseError};
use superfrieze::frieze::{FriezeIndex, Superfrieze};
use superfrieze::hill::{self, FifthHalfCoefficients, HillCoefficients, HillSystem, SuperSequencePair};
use superfrieze::{presets, variety, SuperScalar};

#[derive(Parser)]
#[command(name = "superfrieze", version, about = "Superfriezes, supersymmetric Hill equations and supercontinuants")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print indented JSON (implies --json).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a superfrieze from its first rows.
    FriezeGen {
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Also write the frieze JSON to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Validate a frieze JSON file (`-` for stdin).
    FriezeCheck { file: String },
    /// Monodromy of a Hill equation and the condition M = diag(-1,-1,1).
    HillMonodromy {
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Index i of the monodromy M_i.
        #[arg(long)]
        base: Option<i64>,
    },
    /// Equations of the supervariety for period n.
    HillVariety { n: usize },
    /// A supercontinuant of the given family.
    Continuant {
        family: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        /// Even entries a1..an (default: free generators).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Odd entries b1..bn (default: free generators).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Term counts of the symbolic supercontinuants for n = 1..=max.
    Counts { family: String, max: usize },
    /// Apply a difference operator to a sequence V + xi W.
    SlApply {
        /// Order "3/2" (Sturm-Liouville) or "5/2".
        #[arg(long, default_value = "3/2")]
        order: String,
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Primed even coefficients a'_i (order 5/2).
        #[arg(long, allow_hyphen_values = true)]
        a_prime: Option<String>,
        /// Primed odd coefficients beta'_i (order 5/2).
        #[arg(long, allow_hyphen_values = true)]
        beta_prime: Option<String>,
        /// Apply the displayed order-5/2 operator literally instead of the
        /// recurrence residual.
        #[arg(long)]
        literal: bool,
        /// Even components V_from, V_from+1, ...
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Odd components W_from, W_from+1, ...
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Index of the first sequence element.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        from: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    Euler,
    Determinant,
    Berezinian,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Closed width-1 frieze in (x, xi, eta).
    Width1,
    /// Closed width-2 frieze in (x, y, xi, eta, zeta).
    Pentagramma,
    /// Period-3 family a_i = 1, beta_i = (-1)^i beta.
    Period3,
    /// Free generators a_i, b_i (needs --n).
    Generic,
    /// Classical closed frieze of a random triangulation (needs --n, --seed).
    Random,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    /// Even first-row entries, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Odd first-row entries, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Classical quiddity, comma separated integers.
    #[arg(long)]
    quiddity: Option<String>,
    /// Coefficients JSON file {"n", "a", "beta", "start"}.
    #[arg(long)]
    input: Option<String>,
    /// Index of the first listed coefficient.
    #[arg(long, allow_hyphen_values = true)]
    start: Option<i64>,
    /// Period for the generic and random presets.
    #[arg(long)]
    n: Option<usize>,
    /// Seed for the random preset.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Input(String),
    Check(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_expressions(what: &str, text: &str) -> Result<Vec<SuperScalar>, Failure> {
    parse_list(text).map_err(|e| {
        let caret = " ".repeat(e.position);
        Failure::Input(format!("{what}: {e}\n  {text}\n  {caret}^"))
    })
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

impl CoeffArgs {
    fn resolve(&self) -> Result<HillCoefficients, Failure> {
        let c = if let Some(path) = &self.input {
            let c: HillCoefficients =
                serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            c.validated().map_err(input_err)?
        } else if let Some(q) = &self.quiddity {
            let q: Vec<i64> = q
                .split(',')
                .map(|s| s.trim().parse().map_err(|e| Failure::Input(format!("quiddity: {e}"))))
                .collect::<Result<_, _>>()?;
            presets::classical(&q).map_err(input_err)?
        } else if let Some(p) = self.preset {
            match p {
                Preset::Width1 => presets::width_one(),
                Preset::Pentagramma => presets::pentagramma(),
                Preset::Period3 => presets::period_three(),
                Preset::Generic => {
                    let n = self.n.ok_or_else(|| input_err("--preset generic needs --n"))?;
                    let a = (0..n as i64).map(|i| SuperScalar::even("a", i)).collect();
                    let b = (0..n as i64).map(|i| SuperScalar::odd("b", i)).collect();
                    HillCoefficients::with_start(0, a, b).map_err(input_err)?
                }
                Preset::Random => {
                    let n = self.n.ok_or_else(|| input_err("--preset random needs --n"))?;
                    if n < 3 {
                        return Err(input_err("--n must be at least 3"));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                    let q = presets::triangulation_quiddity(n, |len| rng.random_range(0..len));
                    presets::classical(&q).map_err(input_err)?
                }
            }
        } else {
            let (Some(a), Some(b)) = (&self.a, &self.beta) else {
                return Err(input_err("give --preset, --quiddity, --input or both --a and --beta"));
            };
            let a = parse_expressions("--a", a)?;
            let b = parse_expressions("--beta", b)?;
            HillCoefficients::with_start(0, a, b).map_err(input_err)?
        };
        Ok(match self.start {
            Some(s) => c.reindexed(s),
            None => c,
        })
    }
}

struct Output {
    json: bool,
    pretty: bool,
}

impl Output {
    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.json || self.pretty {
            let s = if self.pretty {
                serde_json::to_string_pretty(value)
            } else {
                serde_json::to_string(value)
            }
            .expect("values serialize");
            println!("{s}");
        } else {
            print!("{}", text());
        }
    }
}

fn frieze_gen(out: &Output, coeffs: &CoeffArgs, file: Option<&str>) -> Result<(), Failure> {
    let c = coeffs.resolve()?;
    let f = Superfrieze::from_first_rows(&c).map_err(input_err)?;
    if let Some(path) = file {
        let text = serde_json::to_string_pretty(&f).expect("frieze serializes");
        fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    }
    out.emit(&f, || f.render());
    Ok(())
}

#[derive(Serialize)]
struct CheckLine {
    check: &'static str,
    pass: bool,
    checked: usize,
    counterexample: Option<String>,
}

fn check_line(check: &'static str, checked: usize, failures: &[FriezeIndex]) -> CheckLine {
    CheckLine {
        check,
        pass: checked > 0 && failures.is_empty(),
        checked,
        counterexample: failures.first().map(ToString::to_string),
    }
}

fn frieze_report(f: &Superfrieze) -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let diamonds = f.diamonds().len();
    lines.push(check_line("diamonds", diamonds, &f.rule_violations()));
    lines.push(match f.check_neighbor_relations() {
        Ok(k) => check_line("neighbors", k, &[]),
        Err(idx) => check_line("neighbors", 1, &[idx]),
    });
    let closure = f.closure_residuals();
    let first_open = closure.iter().find(|r| !r.residual.is_zero());
    let closed = f.check_closure();
    lines.push(CheckLine {
        check: "closure",
        pass: closed,
        checked: closure.len(),
        counterexample: first_open.map(|r| r.equation.clone()),
    });
    let not_closed = |check| CheckLine {
        check,
        pass: false,
        checked: 0,
        counterexample: Some("frieze is not closed".into()),
    };
    lines.push(match f.glide_report() {
        Ok((k, bad)) => check_line("glide", k, &bad),
        Err(_) => not_closed("glide"),
    });
    lines.push(match f.periodicity_report() {
        Ok((k, bad)) => check_line("periodicity", k, &bad),
        Err(_) => not_closed("periodicity"),
    });
    lines.push(match f.first_row_pairing() {
        Ok(pass) => CheckLine {
            check: "pairing",
            pass,
            checked: f.period(),
            counterexample: None,
        },
        Err(e) => CheckLine {
            check: "pairing",
            pass: false,
            checked: 0,
            counterexample: Some(e.to_string()),
        },
    });
    let diagonals: Vec<i64> = (f.base()..f.base() + f.period() as i64).collect();
    let bad = diagonals
        .iter()
        .find(|&&j| !f.diagonal_satisfies_hill(j).unwrap_or(false));
    lines.push(CheckLine {
        check: "hill-diagonals",
        pass: bad.is_none(),
        checked: diagonals.len(),
        counterexample: bad.map(|j| format!("diagonal {j}")),
    });
    lines
}

fn frieze_check(out: &Output, file: &str) -> Result<(), Failure> {
    let text = read_input(file)?;
    let f: Superfrieze = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
    let lines = frieze_report(&f);
    let all = lines.iter().all(|l| l.pass);
    out.emit(&json!({ "pass": all, "checks": lines }), || {
        lines
            .iter()
            .map(|l| {
                let verdict = if l.pass { "pass" } else { "FAIL" };
                let extra = l.counterexample.as_deref().map(|c| format!(", first failure {c}")).unwrap_or_default();
                format!("{:<15} {verdict} ({} checked{extra})\n", l.check, l.checked)
            })
            .collect()
    });
    if all {
        Ok(())
    } else {
        Err(Failure::Check("frieze check failed".into()))
    }
}

fn hill_monodromy(out: &Output, coeffs: &CoeffArgs, base: Option<i64>) -> Result<(), Failure> {
    let c = coeffs.resolve()?;
    let base = base.unwrap_or(c.start());
    let sys = HillSystem::with_base(c, base).map_err(input_err)?;
    let m = sys.monodromy();
    let ok = hill::check_hill_condition(&m);
    out.emit(&json!({ "base": base, "monodromy": m, "hill_condition": ok }), || {
        format!("M_{base} =\n{m}\nhill condition: {ok}\n")
    });
    Ok(())
}

fn hill_variety(out: &Output, n: usize) -> Result<(), Failure> {
    if n < 3 {
        return Err(input_err("n must be at least 3"));
    }
    let raw = variety::raw_equations(n);
    let reference = variety::check_reference(n);
    let verified = reference.as_ref().and_then(|checks| {
        checks
            .iter()
            .map(|c| c.vanishes)
            .collect::<Option<Vec<bool>>>()
            .map(|v| v.iter().all(|&b| b))
    });
    let json = json!({
        "n": n,
        "equations": raw.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "reference": reference.as_ref().map(|checks| checks.iter().map(|c| json!({
            "equation": c.equation.to_string(),
            "in_raw": c.in_raw,
            "vanishes_on_instance": c.vanishes,
        })).collect::<Vec<_>>()),
        "substitution_verified": verified,
    });
    out.emit(&json, || {
        let mut s = format!("raw equations for n = {n} ({}):\n", raw.len());
        for eq in &raw {
            s.push_str(&format!("  {eq} = 0\n"));
        }
        if let Some(checks) = &reference {
            s.push_str("reference equations:\n");
            for c in checks {
                let vanish = match c.vanishes {
                    Some(true) => "vanishes on instance",
                    Some(false) => "DOES NOT vanish on instance",
                    None => "no instance",
                };
                let raw_note = if c.in_raw { "raw" } else { "derived" };
                s.push_str(&format!("  {} = 0  [{raw_note}; {vanish}]\n", c.equation));
            }
            if let Some(v) = verified {
                s.push_str(&format!("substitution verified: {v}\n"));
            }
        }
        s
    });
    Ok(())
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    s.parse().map_err(input_err)
}

fn continuant(
    out: &Output,
    family: &str,
    n: usize,
    method: Method,
    a: Option<&str>,
    beta: Option<&str>,
) -> Result<(), Failure> {
    let family = parse_family(family)?;
    let spec = match (a, beta) {
        (None, None) => ContinuantSpec::symbolic(family, n).map_err(input_err)?,
        (Some(a), Some(b)) => {
            let a = parse_expressions("--a", a)?;
            let b = parse_expressions("--beta", b)?;
            if b.len() != n {
                return Err(input_err(format!("--beta has {} entries, expected {n}", b.len())));
            }
            ContinuantSpec::new(family, a, b).map_err(input_err)?
        }
        _ => return Err(input_err("give both --a and --beta or neither")),
    };
    let berezinian = |spec: &ContinuantSpec| -> Result<SuperScalar, Failure> {
        if family != Family::Even {
            return Err(input_err("the Berezinian form exists for the even family only"));
        }
        continuants::supercontinuant_berezinian(spec.a_list(), spec.beta_list()).map_err(input_err)
    };
    let (name, value, agree) = match method {
        Method::Recurrence => ("recurrence", continuants::supercontinuant_recurrence(&spec), true),
        Method::Euler => ("euler", continuants::supercontinuant_euler(&spec), true),
        Method::Determinant => ("determinant", continuants::supercontinuant_determinant(&spec), true),
        Method::Berezinian => ("berezinian", berezinian(&spec)?, true),
        Method::All => {
            let r = continuants::supercontinuant_recurrence(&spec);
            let mut agree = continuants::supercontinuant_euler(&spec) == r
                && continuants::supercontinuant_determinant(&spec) == r;
            if family == Family::Even {
                agree &= berezinian(&spec)? == r;
            }
            ("all", r, agree)
        }
    };
    out.emit(
        &json!({ "family": family, "n": n, "method": name, "agree": agree, "value": value, "text": value.to_string() }),
        || {
            let mut s = format!("{value}\n");
            if !agree {
                s.push_str("methods disagree\n");
            }
            s
        },
    );
    if agree {
        Ok(())
    } else {
        Err(Failure::Check("methods disagree".into()))
    }
}

fn counts(out: &Output, family: &str, max: usize) -> Result<(), Failure> {
    let family = parse_family(family)?;
    let values = (1..=max)
        .map(|n| continuants::term_count(family, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(input_err)?;
    out.emit(&values, || {
        let words: Vec<String> = values.iter().map(ToString::to_string).collect();
        format!("{}\n", words.join(" "))
    });
    Ok(())
}

fn sequence_text(s: &SuperSequencePair) -> String {
    let mut out = String::new();
    for (i, v) in &s.v {
        out.push_str(&format!("V[{i}] = {v}\n"));
    }
    for (i, w) in &s.w {
        out.push_str(&format!("W[{i}] = {w}\n"));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn sl_apply(
    out: &Output,
    order: &str,
    coeffs: &CoeffArgs,
    a_prime: Option<&str>,
    beta_prime: Option<&str>,
    literal: bool,
    v: &str,
    w: &str,
    from: i64,
) -> Result<(), Failure> {
    let seq = SuperSequencePair::from_vecs(from, parse_expressions("--v", v)?, parse_expressions("--w", w)?);
    if !seq.v.values().all(SuperScalar::is_even) || !seq.w.values().all(SuperScalar::is_odd) {
        return Err(input_err("--v entries must be even and --w entries odd"));
    }
    let result = match order {
        "3/2" => {
            let c = coeffs.resolve()?;
            hill::apply_sturm_liouville(&c, &seq).map_err(input_err)?
        }
        "5/2" => {
            let (Some(a), Some(b), Some(ap), Some(bp)) = (&coeffs.a, &coeffs.beta, a_prime, beta_prime) else {
                return Err(input_err("order 5/2 needs --a, --beta, --a-prime and --beta-prime"));
            };
            let c = FifthHalfCoefficients::new(
                parse_expressions("--a", a)?,
                parse_expressions("--a-prime", ap)?,
                parse_expressions("--beta", b)?,
                parse_expressions("--beta-prime", bp)?,
            )
            .map_err(input_err)?;
            if literal {
                hill::apply_fifth_half_operator(&c, &seq).map_err(input_err)?
            } else {
                hill::fifth_half_residual(&c, &seq).map_err(input_err)?
            }
        }
        other => return Err(input_err(format!("unknown order {other:?}; expected 3/2 or 5/2"))),
    };
    out.emit(&result, || sequence_text(&result));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Output {
        json: cli.json,
        pretty: cli.pretty,
    };
    match cli.command {
        Command::FriezeGen { coeffs, out: file } => frieze_gen(&out, &coeffs, file.as_deref()),
        Command::FriezeCheck { file } => frieze_check(&out, &file),
        Command::HillMonodromy { coeffs, base } => hill_monodromy(&out, &coeffs, base),
        Command::HillVariety { n } => hill_variety(&out, n),
        Command::Continuant {
            family,
            n,
            method,
            a,
            beta,
        } => continuant(&out, &family, n, method, a.as_deref(), beta.as_deref()),
        Command::Counts { family, max } => counts(&out, &family, max),
        Command::SlApply {
            order,
            coeffs,
            a_prime,
            beta_prime,
            literal,
            v,
            w,
            from,
        } => sl_apply(
            &out,
            &order,
            &coeffs,
            a_prime.as_deref(),
            beta_prime.as_deref(),
            literal,
            &v,
            &w,
            from,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
