//! Command-line front end. Every subcommand is a pure function from its
//! arguments to a single JSON document on standard output: object keys are
//! sorted, rationals are normalized, and repeated invocations produce
//! byte-identical bytes.
//!
//! Exit codes: `0` success, `1` validation/usage/parse error (message on
//! standard error), `2` internal assertion failure (including any failing
//! item of the `paper-check` golden suite).

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::form::{transvectant, BinaryForm};
use crate::involution::{
    build_sys, canonical_basis, canonical_check, enumerate_involutors, geometric_involutor,
    sigma_apply, verify_involutor, z_from_sign, Involutor, SignSequence, VerifyMode,
};
use crate::jsonio::{
    form_from_json, form_is_rational, form_json, multipoly_json, rational_list_json,
    symbolic_form_from_json, symbolic_form_json,
};
use crate::loci::{
    beta_covariant, centre_conditions, embed_form, lambda_covariant, q_universe,
    sextic_cubic_curve,
};
use crate::poly::{MultiPoly, Universe};
use crate::recoupling::{
    expand_compound, omega, racah_6j, tetra_cg, theta_coefficients, HalfInt,
};
use crate::ring::{format_rational, parse_rational, rat, rat_int, Rational};

#[derive(Parser)]
#[command(
    name = "binform",
    version,
    about = "Exact transvectant calculus for binary forms",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Exact rational membership in the quadratic involutor system.
    Fast,
    /// Fully symbolic σ∘σ = Δᵈ·id check (also runs the fast path).
    Symbolic,
}

impl Mode {
    fn verify_mode(self) -> VerifyMode {
        match self {
            Mode::Fast => VerifyMode::Fast,
            Mode::Symbolic => VerifyMode::Symbolic,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Fast => "fast",
            Mode::Symbolic => "symbolic",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CovariantKind {
    /// β = (Q²,F)₃ of an order-4 form.
    Beta,
    /// λ = (Q³,F)₅ of an order-6 form.
    Lambda,
}

#[derive(Subcommand)]
enum Command {
    /// r-th transvectant (A,B)_r of two forms (rational or symbolic)
    Transvect {
        /// Path to the JSON file for A
        #[arg(long, value_name = "FORM.json")]
        a: Option<PathBuf>,
        /// Inline JSON for A
        #[arg(long = "a-json", value_name = "JSON")]
        a_json: Option<String>,
        /// Path to the JSON file for B
        #[arg(long, value_name = "FORM.json")]
        b: Option<PathBuf>,
        /// Inline JSON for B
        #[arg(long = "b-json", value_name = "JSON")]
        b_json: Option<String>,
        /// Transvectant index
        #[arg(short)]
        r: usize,
    },
    /// The involutor system of order d: α table and rendered equations
    Sys {
        #[arg(short)]
        d: usize,
    },
    /// Enumerate all 2^(⌊d/2⌋+1) involutors with their sign sequences
    Involutors {
        #[arg(short)]
        d: usize,
        /// Verification applied to each involutor
        #[arg(long, value_enum, default_value = "fast")]
        verify: Mode,
    },
    /// The involutor z(s) attached to a sign sequence
    ZOfSign {
        /// Sign sequence, e.g. "+-+-+"
        #[arg(short, allow_hyphen_values = true)]
        s: String,
    },
    /// Check whether a z-vector is an involutor for order d
    Verify {
        #[arg(short)]
        d: usize,
        /// Comma-separated rational coordinates, e.g. "16,24/7,1/5"
        #[arg(long, allow_hyphen_values = true, value_name = "CSV")]
        z: String,
        #[arg(long, value_enum, default_value = "fast")]
        mode: Mode,
    },
    /// Apply σ_{Q,z(s)} to a form
    ApplySigma {
        /// Path to the JSON file for the order-2 form Q
        #[arg(long, value_name = "FORM.json")]
        q: Option<PathBuf>,
        /// Inline JSON for Q
        #[arg(long = "q-json", value_name = "JSON")]
        q_json: Option<String>,
        /// Sign sequence selecting the involutor
        #[arg(short, allow_hyphen_values = true)]
        s: String,
        /// Path to the JSON file for F
        #[arg(long, value_name = "FORM.json")]
        f: Option<PathBuf>,
        /// Inline JSON for F
        #[arg(long = "f-json", value_name = "JSON")]
        f_json: Option<String>,
    },
    /// Canonical-basis membership of a form for a sign sequence
    Canonical {
        /// Sign sequence
        #[arg(short, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_name = "FORM.json")]
        f: Option<PathBuf>,
        #[arg(long = "f-json", value_name = "JSON")]
        f_json: Option<String>,
    },
    /// ω coefficients of the expansion (Qᵃ,(Qᵇ,F)_r)_s = Σ_t ω·Δ^((a+b−t)/2)·(Qᵗ,F)_(r+s−a−b+t)
    Omega {
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        s: usize,
        /// Order of F
        #[arg(short)]
        d: usize,
        /// Single t (omit for the whole expansion with companion data)
        #[arg(short, allow_negative_numbers = true)]
        t: Option<i64>,
    },
    /// θ_k coefficients rewriting (A,(B,C)_r)_s as Σ_k θ_k((A,B)_k,C)_(r+s−k)
    Recouple {
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        c: usize,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        s: usize,
    },
    /// Wigner 6-j symbol as rational·√radicand
    Sixj {
        #[arg(long, value_name = "HALFINT")]
        j1: String,
        #[arg(long, value_name = "HALFINT")]
        j2: String,
        #[arg(long, value_name = "HALFINT")]
        j3: String,
        #[arg(long, value_name = "HALFINT")]
        j12: String,
        #[arg(long, value_name = "HALFINT")]
        j23: String,
        #[arg(long = "J", value_name = "HALFINT")]
        j: String,
    },
    /// Rational tetrahedron Clebsch–Gordan normalisation
    Tetra {
        #[arg(long, value_name = "HALFINT")]
        j1: String,
        #[arg(long, value_name = "HALFINT")]
        j2: String,
        #[arg(long, value_name = "HALFINT")]
        j3: String,
        #[arg(long, value_name = "HALFINT")]
        j12: String,
        #[arg(long, value_name = "HALFINT")]
        j23: String,
        #[arg(long = "J", value_name = "HALFINT")]
        j: String,
    },
    /// Centre-locus generators of (z(s), F) as polynomials in q₀,q₁,q₂
    Centres {
        #[arg(short, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_name = "FORM.json")]
        f: Option<PathBuf>,
        #[arg(long = "f-json", value_name = "JSON")]
        f_json: Option<String>,
    },
    /// The covariant β (quartics) or λ (sextics) over symbolic Q
    Covariant {
        #[arg(value_enum)]
        kind: CovariantKind,
        #[arg(long, value_name = "FORM.json")]
        f: Option<PathBuf>,
        #[arg(long = "f-json", value_name = "JSON")]
        f_json: Option<String>,
    },
    /// The planar cubic (Q³,F)₆ of an order-6 form
    Curve {
        #[arg(long, value_name = "FORM.json")]
        f: Option<PathBuf>,
        #[arg(long = "f-json", value_name = "JSON")]
        f_json: Option<String>,
    },
    /// The geometric involutor g of order d
    Geometric {
        #[arg(short)]
        d: usize,
    },
    /// Re-derive the built-in golden reference values and report each item
    PaperCheck,
}

/// Run the CLI on the given arguments (without the program name), writing
/// JSON to `out` and diagnostics to `err`; returns the process exit code.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let argv = std::iter::once("binform".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((value, code)) => {
            let _ = writeln!(out, "{value}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}

fn execute(command: Command) -> Result<(Value, i32)> {
    let value = match command {
        Command::Transvect {
            a,
            a_json,
            b,
            b_json,
            r,
        } => cmd_transvect(&payload(&a, &a_json, "a")?, &payload(&b, &b_json, "b")?, r)?,
        Command::Sys { d } => cmd_sys(d)?,
        Command::Involutors { d, verify } => cmd_involutors(d, verify)?,
        Command::ZOfSign { s } => {
            let seq: SignSequence = s.parse()?;
            let z = z_from_sign(&seq)?;
            json!({"sign": s.trim(), "z": rational_list_json(z.z())})
        }
        Command::Verify { d, z, mode } => {
            let coords = parse_csv_rationals(&z)?;
            let inv = Involutor::from_parts(d, coords)?;
            let ok = verify_involutor(&inv, mode.verify_mode())?;
            json!({
                "d": d,
                "mode": mode.name(),
                "verified": ok,
                "z": rational_list_json(inv.z()),
            })
        }
        Command::ApplySigma {
            q,
            q_json,
            s,
            f,
            f_json,
        } => {
            let qf = rational_form(&payload(&q, &q_json, "q")?)?;
            let ff = rational_form(&payload(&f, &f_json, "f")?)?;
            let seq: SignSequence = s.parse()?;
            let z = z_from_sign(&seq)?;
            form_json(&sigma_apply(&qf, &z, &ff)?)
        }
        Command::Canonical { s, f, f_json } => {
            let seq: SignSequence = s.parse()?;
            let ff = rational_form(&payload(&f, &f_json, "f")?)?;
            let ok = canonical_check(&seq, &ff)?;
            let (plus, minus) = canonical_basis(&seq);
            json!({
                "canonical": ok,
                "plus": exponent_pairs(&plus),
                "minus": exponent_pairs(&minus),
            })
        }
        Command::Omega { a, b, r, s, d, t } => cmd_omega(a, b, r, s, d, t)?,
        Command::Recouple { a, b, c, r, s } => {
            let table = theta_coefficients(a, b, c, r, s)?;
            let map: serde_json::Map<String, Value> = table
                .coefficients()
                .iter()
                .map(|(k, v)| (k.to_string(), Value::String(format_rational(v))))
                .collect();
            json!({ "theta": map })
        }
        Command::Sixj {
            j1,
            j2,
            j3,
            j12,
            j23,
            j,
        } => {
            let [j1, j2, j3, j12, j23, j] = parse_labels([&j1, &j2, &j3, &j12, &j23, &j])?;
            let v = racah_6j(j1, j2, j3, j12, j23, j)?;
            json!({"sixj": {
                "rational": format_rational(v.rational_part()),
                "radicand": format_rational(v.radicand()),
            }})
        }
        Command::Tetra {
            j1,
            j2,
            j3,
            j12,
            j23,
            j,
        } => {
            let [j1, j2, j3, j12, j23, j] = parse_labels([&j1, &j2, &j3, &j12, &j23, &j])?;
            let v = tetra_cg(j1, j2, j3, j12, j23, j)?;
            json!({ "tetra": format_rational(&v) })
        }
        Command::Centres { s, f, f_json } => {
            let seq: SignSequence = s.parse()?;
            let z = z_from_sign(&seq)?;
            let ff = rational_form(&payload(&f, &f_json, "f")?)?;
            let sys = centre_conditions(&z, &ff)?;
            Value::Array(sys.generators().iter().map(multipoly_json).collect())
        }
        Command::Covariant { kind, f, f_json } => {
            let ff = rational_form(&payload(&f, &f_json, "f")?)?;
            let embedded = embed_form(&ff, &q_universe());
            let cov = match kind {
                CovariantKind::Beta => beta_covariant(&embedded)?,
                CovariantKind::Lambda => lambda_covariant(&embedded)?,
            };
            symbolic_form_json(&cov)
        }
        Command::Curve { f, f_json } => {
            let ff = rational_form(&payload(&f, &f_json, "f")?)?;
            multipoly_json(&sextic_cubic_curve(&ff)?)
        }
        Command::Geometric { d } => {
            let g = geometric_involutor(d)?;
            json!({ "z": rational_list_json(g.z()) })
        }
        Command::PaperCheck => return cmd_paper_check(),
    };
    Ok((value, 0))
}

/// Resolve a form payload given `--x path` / `--x-json inline` flags.
fn payload(path: &Option<PathBuf>, inline: &Option<String>, flag: &str) -> Result<Value> {
    let text = match (path, inline) {
        (Some(p), None) => std::fs::read_to_string(p).map_err(|e| {
            Error::Validation(format!("cannot read --{flag} file `{}`: {e}", p.display()))
        })?,
        (None, Some(s)) => s.clone(),
        (None, None) => {
            return Err(Error::Validation(format!(
                "provide the form via --{flag} FILE or --{flag}-json JSON"
            )))
        }
        (Some(_), Some(_)) => {
            return Err(Error::Validation(format!(
                "--{flag} and --{flag}-json are mutually exclusive"
            )))
        }
    };
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("malformed JSON for --{flag}: {e}")))
}

fn rational_form(v: &Value) -> Result<BinaryForm<Rational>> {
    form_from_json(v)
}

fn parse_csv_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

fn parse_labels(raw: [&str; 6]) -> Result<[HalfInt; 6]> {
    let mut out = [HalfInt::from_twice(0); 6];
    for (slot, text) in out.iter_mut().zip(raw) {
        *slot = text.parse()?;
    }
    Ok(out)
}

fn exponent_pairs(pairs: &[(usize, usize)]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|&(p, q)| json!([p, q]))
            .collect(),
    )
}

fn union_universe(a: &Universe, b: &Universe) -> Universe {
    let mut names: Vec<String> = a.as_slice().to_vec();
    for n in b.iter() {
        if !names.contains(n) {
            names.push(n.clone());
        }
    }
    Arc::new(names)
}

fn embed_symbolic(f: &BinaryForm<MultiPoly>, u: &Universe) -> Result<BinaryForm<MultiPoly>> {
    let raw = f
        .raw()
        .iter()
        .map(|c| c.embed_into(u))
        .collect::<Result<Vec<_>>>()?;
    BinaryForm::from_raw(f.order(), raw)
}

fn cmd_transvect(va: &Value, vb: &Value, r: usize) -> Result<Value> {
    if form_is_rational(va) && form_is_rational(vb) {
        let a = form_from_json(va)?;
        let b = form_from_json(vb)?;
        return Ok(form_json(&transvectant(&a, &b, r)?));
    }
    let a = symbolic_form_from_json(va)?;
    let b = symbolic_form_from_json(vb)?;
    let u = union_universe(a.raw()[0].vars(), b.raw()[0].vars());
    let a = embed_symbolic(&a, &u)?;
    let b = embed_symbolic(&b, &u)?;
    Ok(symbolic_form_json(&transvectant(&a, &b, r)?))
}

fn cmd_sys(d: usize) -> Result<Value> {
    let sys = build_sys(d)?;
    let n = sys.n();
    let mut alpha = serde_json::Map::new();
    for t_half in 0..=n {
        let t = 2 * t_half;
        let matrix: Vec<Vec<String>> = (0..=n)
            .map(|i| (0..=n).map(|j| format_rational(&sys.alpha(i, j, t))).collect())
            .collect();
        alpha.insert(t.to_string(), json!(matrix));
    }
    let equations: Vec<String> = (1..=n).map(|t_half| sys.render_equation(2 * t_half)).collect();
    Ok(json!({
        "d": d,
        "n": n,
        "alpha": alpha,
        "equations": equations,
        "norm": sys.render_equation(0),
    }))
}

fn cmd_involutors(d: usize, verify: Mode) -> Result<Value> {
    let mode = verify.verify_mode();
    let mut rows = Vec::new();
    for (s, z) in enumerate_involutors(d)? {
        let ok = verify_involutor(&z, mode)?;
        rows.push(json!({
            "sign": s.to_string(),
            "verified": ok,
            "z": rational_list_json(z.z()),
        }));
    }
    Ok(Value::Array(rows))
}

fn cmd_omega(a: usize, b: usize, r: usize, s: usize, d: usize, t: Option<i64>) -> Result<Value> {
    if let Some(t) = t {
        let v = omega(a, b, r, s, t, d)?;
        let mut map = serde_json::Map::new();
        map.insert(t.to_string(), Value::String(format_rational(&v)));
        return Ok(json!({ "omega": map }));
    }
    let table = expand_compound(a, b, r, s, d)?;
    let mut map = serde_json::Map::new();
    let mut terms = Vec::new();
    for (t, term) in &table {
        map.insert(t.to_string(), Value::String(format_rational(&term.omega)));
        terms.push(json!({
            "coeff": format_rational(&term.omega),
            "delta_power": term.delta_power,
            "t": t,
            "transvectant_index": term.transvectant_index,
        }));
    }
    Ok(json!({ "omega": map, "terms": terms }))
}

// ---------------------------------------------------------------------------
// Golden reference suite
// ---------------------------------------------------------------------------

/// The symmetrically collected coefficients of the order-6 involutor system,
/// frozen from the published display: entries (i, j, "p/q") per equation
/// level t; coefficients not listed are exactly zero.
const SYS6_T2: &[(usize, usize, &str)] = &[
    (0, 0, "-25/20328"),
    (0, 1, "5/3234"),
    (1, 1, "-1/2058"),
    (1, 2, "22/735"),
    (2, 2, "11/210"),
    (2, 3, "2"),
];
const SYS6_T4: &[(usize, usize, &str)] = &[
    (0, 0, "5/1331"),
    (0, 1, "-15/847"),
    (0, 2, "5/121"),
    (1, 1, "-69/5390"),
    (1, 2, "-2/77"),
    (1, 3, "2"),
    (2, 2, "2/5"),
];
const SYS6_T6: &[(usize, usize, &str)] = &[
    (0, 0, "-5/2541"),
    (0, 1, "4/165"),
    (0, 2, "-7/33"),
    (0, 3, "2"),
    (1, 1, "-1/35"),
    (1, 2, "2/15"),
];
const SYS6_NORM: &[(usize, usize, &str)] = &[
    (0, 0, "1/6468"),
    (1, 1, "11/22050"),
    (2, 2, "1/75"),
    (3, 3, "1"),
];

/// The five published involutor z-vectors with their sign sequences.
const Z_VECTORS: &[(&str, &[&str])] = &[
    ("+---+", &["4", "48/7", "-1/5"]),
    ("+-+-+", &["16", "24/7", "1/5"]),
    ("++-++", &["-12", "24/7", "3/5"]),
    ("+++-+++", &["40", "-180/11", "20/7", "5/7"]),
    ("++-+-++", &["-60", "-60/11", "30/7", "3/7"]),
];

fn check_sys6() -> Result<bool> {
    let sys = build_sys(6)?;
    let tables: [(usize, &[(usize, usize, &str)]); 4] = [
        (2, SYS6_T2),
        (4, SYS6_T4),
        (6, SYS6_T6),
        (0, SYS6_NORM),
    ];
    for (t, entries) in tables {
        for i in 0..=sys.n() {
            for j in i..=sys.n() {
                let expected = entries
                    .iter()
                    .find(|&&(ei, ej, _)| ei == i && ej == j)
                    .map(|&(_, _, v)| parse_rational(v))
                    .transpose()?
                    .unwrap_or_else(|| rat_int(0));
                if sys.collected(i, j, t) != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_z_vectors() -> Result<bool> {
    for (sign, coords) in Z_VECTORS {
        let seq: SignSequence = sign.parse()?;
        let z = z_from_sign(&seq)?;
        let expected: Vec<Rational> = coords
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<_>>()?;
        if z.z() != expected.as_slice() {
            return Ok(false);
        }
    }
    // The second vector is the geometric involutor of order 4.
    Ok(geometric_involutor(4)?.z() == z_from_sign(&"+-+-+".parse()?)?.z())
}

/// The quintic expansion coefficients ω(5,6;2,4;t) for t = 5, 7, 9. The
/// printed display lists the magnitudes 95/286286, 575/1123122, 95/9438; the
/// closed formula (confirmed by an independent linear solve against direct
/// transvectant computation) gives signs −, +, −.
fn check_omega_quintic() -> Result<bool> {
    Ok(omega(5, 6, 2, 4, 5, 5)? == rat(-95, 286286)
        && omega(5, 6, 2, 4, 7, 5)? == rat(575, 1123122)
        && omega(5, 6, 2, 4, 9, 5)? == rat(-95, 9438))
}

fn check_lambda_sixth_powers() -> Result<bool> {
    let u = q_universe();
    let f = BinaryForm::from_raw(
        6,
        [1, 0, 0, 0, 0, 0, 1]
            .iter()
            .map(|&v| rat_int(v))
            .collect(),
    )?;
    let lam = lambda_covariant(&embed_form(&f, &u))?;
    let q0 = MultiPoly::var(&u, "q0")?;
    let q1 = MultiPoly::var(&u, "q1")?;
    let q2 = MultiPoly::var(&u, "q2")?;
    use crate::ring::Coeff;
    let expected = BinaryForm::from_raw(
        2,
        vec![
            q1.mul_ref(&q2.pow(2)).neg_ref(),
            q0.pow(3).sub_ref(&q2.pow(3)),
            q0.pow(2).mul_ref(&q1),
        ],
    )?;
    Ok(lam == expected)
}

fn check_sextic_cubic() -> Result<bool> {
    let f = BinaryForm::from_raw(
        6,
        [1, 0, 0, 0, 1, 0, 1]
            .iter()
            .map(|&v| rat_int(v))
            .collect(),
    )?;
    let curve = sextic_cubic_curve(&f)?;
    let u = q_universe();
    let expected = MultiPoly::from_terms(
        &u,
        &[
            (&[3, 0, 0][..], rat_int(1)),
            (&[1, 2, 0][..], rat(4, 5)),
            (&[2, 0, 1][..], rat(1, 5)),
            (&[0, 0, 3][..], rat_int(1)),
        ],
    )?;
    Ok(curve == expected)
}

fn cmd_paper_check() -> Result<(Value, i32)> {
    let items: [(&str, fn() -> Result<bool>); 5] = [
        ("sys6-coefficients", check_sys6),
        ("involutor-z-vectors", check_z_vectors),
        ("omega-quintic-triple", check_omega_quintic),
        ("lambda-sixth-powers", check_lambda_sixth_powers),
        ("sextic-cubic-curve", check_sextic_cubic),
    ];
    let mut rows = Vec::new();
    let mut failed = 0;
    for (name, check) in items {
        let pass = check()?;
        if !pass {
            failed += 1;
        }
        rows.push(json!({"name": name, "pass": pass}));
    }
    let value = json!({
        "failed": failed,
        "items": rows,
        "passed": rows.len() - failed,
    });
    Ok((value, if failed == 0 { 0 } else { 2 }))
}
