use std::fs;
use std::path::Path;

use hybrid_codes::additive::DEFAULT_ENUMERATION_CAP;
use hybrid_codes::analysis::{
    hybrid_distance_full, min_nonzero_weight, shadow, sweep_size, verify_distance_sweep, weight_enumerator,
    DEFAULT_SWEEP_CAP,
};
use hybrid_codes::constructions::{
    append_zero_qubits, construction_x, juxtapose, qudit_to_classical, BinaryCode, ConstructionXInput,
};
use hybrid_codes::lp::{self, max_m, reproduce_table1};
use hybrid_codes::search::{self, load_seeds, SearchConfig, Strategy};
use hybrid_codes::{catalog, DerivedCodes, Error, Execution, HybridCode, PauliVector, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{BoundArgs, Command, Construct, SearchArgs, StrategyArg, Which};

/// What a command prints, in both forms, and whether its verdict is positive.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

pub fn run(command: Command) -> Result<Report> {
    let exec = Execution::default();
    match command {
        Command::Verify { file, claimed_d } => verify(&read_code(&file)?, claimed_d, exec),
        Command::Distance { file, sweep_target } => distance(&read_code(&file)?, sweep_target, exec),
        Command::Enumerate { file, which } => enumerate(&read_code(&file)?, which, exec),
        Command::Bound(args) => bound(&args, exec),
        Command::Construct(c) => construct(c),
        Command::Search(args) => run_search(&args, exec),
        Command::Catalog { name } => show_catalog(name.as_deref()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<HybridCode> {
    HybridCode::parse(&read(path)?)
}

fn read_rows(path: &Path) -> Result<Vec<PauliVector>> {
    read(path)?
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| {
            l.parse().map_err(|e: Error| Error::Parse {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

fn label(h: &HybridCode) -> String {
    format!("[[{},{}:{}]]", h.n(), h.k(), h.m())
}

enum Certified {
    Exact(usize),
    AtLeast(usize),
    Refuted { target: usize, witness: String },
}

/// Exact distance when `C*` is small enough to enumerate, otherwise a sweep
/// at the claimed distance.
fn certify(d: &DerivedCodes, claimed: Option<usize>, exec: Execution) -> Result<Certified> {
    if d.c_star.rank() <= DEFAULT_ENUMERATION_CAP {
        return Ok(Certified::Exact(hybrid_distance_full(d, DEFAULT_ENUMERATION_CAP, exec)?));
    }
    let Some(target) = claimed else {
        return Err(Error::Precondition(format!(
            "rank {} is too large for exact enumeration; give a claimed distance to sweep",
            d.c_star.rank()
        )));
    };
    let report = verify_distance_sweep(d, target, DEFAULT_SWEEP_CAP, exec)?;
    Ok(match report.witness {
        None => Certified::AtLeast(target),
        Some(witness) => Certified::Refuted { target, witness },
    })
}

fn verify(h: &HybridCode, claimed: Option<usize>, exec: Execution) -> Result<Report> {
    let claimed = claimed.or(h.claimed_d());
    let derived = match h.validate() {
        Ok(d) => d,
        Err(Error::InvalidCode(v)) => {
            return Ok(Report {
                text: format!("{}: invalid code: {v}\n", label(h)),
                json: json!({ "valid": false, "violation": v.to_string() }),
                ok: false,
            })
        }
        Err(e) => return Err(e),
    };
    let certified = certify(&derived, claimed, exec)?;
    let (d, exact) = match certified {
        Certified::Exact(d) => (Some(d), true),
        Certified::AtLeast(d) => (Some(d), false),
        Certified::Refuted { .. } => (None, false),
    };
    let stab_min = if derived.c0.rank() <= DEFAULT_ENUMERATION_CAP {
        min_nonzero_weight(&derived.c0, DEFAULT_ENUMERATION_CAP, exec)?
    } else {
        None
    };
    let impure = match (d, stab_min) {
        (Some(d), Some(w)) => Some(w < d),
        (Some(_), None) if derived.c0.rank() == 0 => Some(false),
        _ => None,
    };
    let confirmed = claimed.map(|c| d.is_some_and(|d| d >= c));

    let mut text = label(h);
    match &certified {
        Certified::Exact(d) => text.push_str(&format!("\nd = {d}")),
        Certified::AtLeast(d) => text.push_str(&format!("\nd >= {d} (sweep)")),
        Certified::Refuted { target, witness } => {
            text.push_str(&format!("\nd < {target}: {witness} lies in C* \\ C0"))
        }
    }
    match impure {
        Some(true) => text.push_str(&format!(", impure (stabilizer weight {})", stab_min.unwrap_or(0))),
        Some(false) => text.push_str(", pure"),
        None => {}
    }
    text.push('\n');
    if let (Some(c), Some(ok)) = (claimed, confirmed) {
        text.push_str(&format!("claimed d = {c}: {}\n", if ok { "confirmed" } else { "refuted" }));
    }
    let witness = match &certified {
        Certified::Refuted { witness, .. } => Some(witness.clone()),
        _ => None,
    };
    Ok(Report {
        text,
        json: json!({
            "valid": true,
            "n": h.n(), "k": h.k(), "m": h.m(),
            "d": d, "exact": exact, "impure": impure,
            "claimed_d": claimed, "confirmed": confirmed, "witness": witness,
        }),
        ok: confirmed.unwrap_or(witness.is_none()),
    })
}

fn distance(h: &HybridCode, sweep_target: Option<usize>, exec: Execution) -> Result<Report> {
    let derived = h.validate()?;
    let Some(target) = sweep_target else {
        let d = hybrid_distance_full(&derived, DEFAULT_ENUMERATION_CAP, exec)?;
        return Ok(Report::ok(format!("d = {d}\n"), json!({ "d": d })));
    };
    let r = verify_distance_sweep(&derived, target, DEFAULT_SWEEP_CAP, exec)?;
    let text = match &r.witness {
        None => format!("d >= {target} ({} errors checked)\n", r.checked),
        Some(w) => format!("d < {target}: {w} lies in C* \\ C0\n"),
    };
    Ok(Report {
        text,
        json: json!({
            "target": target, "passed": r.passed, "witness": r.witness,
            "checked": r.checked.to_string(), "sweep_size": sweep_size(h.n(), target).to_string(),
        }),
        ok: r.passed,
    })
}

fn enumerate(h: &HybridCode, which: Which, exec: Execution) -> Result<Report> {
    let derived = h.validate()?;
    let cap = DEFAULT_ENUMERATION_CAP;
    let (name, w) = match which {
        Which::C0 => ("c0", weight_enumerator(&derived.c0, cap, exec)?),
        Which::C0Star => ("c0*", weight_enumerator(&derived.c0_star, cap, exec)?),
        Which::C => ("c", weight_enumerator(&derived.c, cap, exec)?),
        Which::CStar => ("c*", weight_enumerator(&derived.c_star, cap, exec)?),
        Which::Shadow => {
            let w0 = weight_enumerator(&derived.c0, cap, exec)?;
            ("shadow", shadow(&w0, &(BigInt::from(1) << derived.c0.rank()), 2)?)
        }
    };
    let coeffs = w.to_decimal_strings();
    Ok(Report::ok(
        format!("{}\n{}\n", w.to_polynomial(), coeffs.join(" ")),
        json!({ "which": name, "n": w.n, "coefficients": coeffs }),
    ))
}

fn bound(args: &BoundArgs, exec: Execution) -> Result<Report> {
    let use_shadow = !args.no_shadow;
    if args.table {
        let table = reproduce_table1(&[3, 4, 5], 5..=args.max_n, use_shadow, exec)?;
        let mut text = table.render();
        text.push_str(&format!("{} mismatched cells\n", table.mismatches().len()));
        return Ok(Report::ok(text, serde_json::to_value(&table).expect("table serializes")));
    }
    let (n, k, d) = match (args.n, args.k, args.d) {
        (Some(n), Some(k), Some(d)) => (n, k, d),
        _ => return Err(Error::Precondition("--n, --k and --d are required".into())),
    };
    if let Some(m) = args.m {
        let r = lp::feasible(n, k, m, d, use_shadow)?;
        let text = if r.is_feasible() {
            format!("[[{n},{k}:{m},{d}]] passes the bound\n")
        } else {
            format!(
                "[[{n},{k}:{m},{d}]] does not exist ({})\n",
                r.witness.as_deref().unwrap_or("infeasible")
            )
        };
        let ok = r.is_feasible();
        return Ok(Report {
            text,
            json: serde_json::to_value(&r).expect("result serializes"),
            ok,
        });
    }
    let best = max_m(n, k, d, use_shadow)?;
    let text = match best {
        Some(m) => format!("max m = {m}\n"),
        None => format!("no [[{n},{k}:m,{d}]] code passes the bound\n"),
    };
    Ok(Report {
        text,
        json: json!({ "n": n, "k": k, "d": d, "shadow": use_shadow, "max_m": best }),
        ok: best.is_some(),
    })
}

fn construct(c: Construct) -> Result<Report> {
    let code = match c {
        Construct::X { inner, g12, outer, classical } => {
            let inner = read_code(&inner)?;
            let classical = BinaryCode::parse(&read(&classical)?)?;
            let input = match (g12, outer) {
                (_, Some(outer)) => ConstructionXInput::from_nested(&inner, &read_code(&outer)?, classical)?,
                (Some(g12), None) => ConstructionXInput {
                    inner,
                    g12: read_rows(&g12)?,
                    classical,
                    claimed: None,
                },
                (None, None) => return Err(Error::Precondition("one of --g12, --outer is required".into())),
            };
            construction_x(&input)?
        }
        Construct::Append { file, count } => append_zero_qubits(&read_code(&file)?, count)?,
        Construct::Demote { file } => qudit_to_classical(&read_code(&file)?)?,
        Construct::Juxtapose { file, classical } => {
            juxtapose(&read_code(&file)?, &BinaryCode::parse(&read(&classical)?)?)?
        }
    };
    let text = code.serialize();
    Ok(Report::ok(
        text.clone(),
        json!({ "n": code.n(), "k": code.k(), "m": code.m(), "claimed_d": code.claimed_d(), "code": text }),
    ))
}

fn run_search(args: &SearchArgs, exec: Execution) -> Result<Report> {
    let seeds = load_seeds(&args.seeds)?;
    let cfg = SearchConfig {
        target_d: args.d,
        target_k: args.k,
        max_trials: args.trials,
        rng_seed: args.rng_seed,
        strategy: match args.strategy {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Randomized => Strategy::Randomized,
        },
    };
    let records = search::search(&seeds, &cfg, exec)?;
    eprintln!("{} codes found from {} seeds", records.len(), seeds.len());
    let text: String = records.iter().map(|r| r.to_json_line() + "\n").collect();
    Ok(Report {
        text,
        json: serde_json::to_value(&records).expect("records serialize"),
        ok: !records.is_empty(),
    })
}

fn show_catalog(name: Option<&str>) -> Result<Report> {
    match name {
        Some(name) => {
            let code = catalog::code(name)?;
            let text = code.serialize();
            Ok(Report::ok(
                text.clone(),
                json!({ "name": name, "n": code.n(), "k": code.k(), "m": code.m(),
                        "claimed_d": code.claimed_d(), "code": text }),
            ))
        }
        None => {
            let all = catalog::all();
            let text = all
                .iter()
                .map(|(name, c)| format!("{name:<10} {}\n", c.parameters()))
                .collect();
            let json = all
                .iter()
                .map(|(name, c)| json!({ "name": name, "n": c.n(), "k": c.k(), "m": c.m(), "claimed_d": c.claimed_d() }))
                .collect();
            Ok(Report::ok(text, Value::Array(json)))
        }
    }
}
