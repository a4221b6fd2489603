mod tables;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sknot::algebra::RingSpec;
use sknot::cobordism::{concordance_bounds, gamma_shift_bound, h_shift_bound, reducible_summary, CobordismData};
use sknot::equivariant::{basechange_bn, hat_complex_rank, ideal_ik, ideal_ik_gradings, j_ideals_uniform, z_hat_structured};
use sknot::error::Error;
use sknot::invariants::{gamma, gamma_function, h_field, h_t4, GammaValue};
use sknot::scomplex::SComplex;
use sknot::twobridge::{catalog_complex, signature, KnotSpec};

#[derive(Parser)]
#[command(
    name = "sknot",
    version,
    about = "Instanton S-complexes, Froyshov and Gamma invariants, and concordance bounds for 2-bridge and torus knots"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// generic, t4 or char2
    #[arg(long, default_value = "generic")]
    ring: RingSpec,
    /// Replace double twist knots by their local representatives
    #[arg(long)]
    local: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build (or load) a complex and print its generators
    Complex {
        knot: Option<KnotSpec>,
        #[arg(long, value_name = "FILE", conflicts_with = "knot")]
        from: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Gamma invariant; all levels 0..=h+1 unless --k is given
    Gamma {
        knot: KnotSpec,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Froyshov invariant over the chosen ring
    H {
        knot: KnotSpec,
        #[command(flatten)]
        common: Common,
    },
    /// Clasp, unknotting and crosscap bounds
    Bounds {
        knot: KnotSpec,
        /// Known upper bound on the unknotting number
        #[arg(long)]
        upper: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// J ideals and z-hat of a knot, or I^k with --k
    Ideal {
        knot: Option<KnotSpec>,
        #[arg(long, conflicts_with = "knot")]
        k: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Reducibles and inequalities for a surface in a blow-up of I x S^3
    Cobordism {
        /// Coordinates of [S] in the exceptional basis, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        surface: Vec<i64>,
        /// Coordinates of c, comma separated (default zero)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        genus: i64,
        #[arg(long, default_value_t = 0)]
        s_plus: i64,
        #[arg(long, default_value_t = 0)]
        s_minus: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        sigma_in: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        sigma_out: i64,
        /// Level k and Gamma_in(k) for the Gamma inequality, e.g. --k 0 --gamma-in 0
        #[arg(long, allow_hyphen_values = true, requires = "gamma_in")]
        k: Option<i64>,
        #[arg(long)]
        gamma_in: Option<String>,
        #[arg(long, default_value = "generic")]
        ring: RingSpec,
        #[arg(long)]
        json: bool,
    },
    /// Recompute a reference table and compare with the expected values
    Reproduce {
        #[arg(long, value_name = "NAME")]
        table: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Refused(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::HypothesisViolated(_) | Error::NoBound(_) | Error::Unsupported(_) => Failure::Refused(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Refused(m)) => {
            eprintln!("refused: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(s)) => {
            print!("{s}");
            eprintln!("mismatch against the expected table");
            ExitCode::from(3)
        }
    }
}

fn json_out(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Complex { knot, from, common } => cmd_complex(knot, from, &common),
        Cmd::Gamma { knot, k, common } => cmd_gamma(&knot, k, &common),
        Cmd::H { knot, common } => cmd_h(&knot, &common),
        Cmd::Bounds { knot, upper, json } => cmd_bounds(&knot, upper, json),
        Cmd::Ideal { knot, k, common } => cmd_ideal(knot, k, &common),
        Cmd::Cobordism {
            surface,
            c,
            genus,
            s_plus,
            s_minus,
            sigma_in,
            sigma_out,
            k,
            gamma_in,
            ring,
            json,
        } => {
            let c = if c.is_empty() { vec![0; surface.len()] } else { c };
            let data = CobordismData::new(surface, c, genus, sigma_in, sigma_out)?.with_double_points(s_plus, s_minus)?;
            let gin = gamma_in.map(|g| parse_gamma(&g)).transpose()?;
            cmd_cobordism(&data, k.zip(gin), ring, json)
        }
        Cmd::Reproduce { table, json } => tables::reproduce(&table, json),
    }
}

fn parse_gamma(s: &str) -> Result<GammaValue, Failure> {
    if s == "inf" {
        return Ok(GammaValue::Infinite);
    }
    s.parse().map(GammaValue::Finite).map_err(|_| Failure::Usage(format!("bad rational '{s}'")))
}

fn complex_for(knot: &KnotSpec, common: &Common) -> Result<SComplex, Failure> {
    Ok(catalog_complex(knot, common.local, common.ring)?)
}

fn cmd_complex(knot: Option<KnotSpec>, from: Option<String>, common: &Common) -> Out {
    let c = match (knot, from) {
        (Some(k), None) => complex_for(&k, common)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            SComplex::from_json(&v)?
        }
        _ => return Err(Failure::Usage("give a knot or --from FILE".into())),
    };
    let report = c.validate();
    if common.json {
        return Ok(json_out(c.to_json()));
    }
    let mut s = String::new();
    writeln!(s, "ring {}  generators {}  euler {}", c.ring, c.rank(), c.euler_characteristic()).unwrap();
    for g in &c.generators {
        writeln!(s, "  {:<8} {}", g.name, g.grading).unwrap();
    }
    for (name, m) in [("d", &c.d), ("v", &c.v), ("delta1", &c.delta1), ("delta2", &c.delta2)] {
        for (r, col, x) in m.iter() {
            let src = c.generators.get(col).map_or("1", |g| g.name.as_str());
            let dst = if name == "delta1" { "1" } else { c.generators[r].name.as_str() };
            writeln!(s, "  {name}: {src} -> {dst}  {x}").unwrap();
        }
    }
    if report.passed() {
        writeln!(s, "valid").unwrap();
    } else {
        for v in &report.violations {
            writeln!(s, "violation {v}").unwrap();
        }
    }
    Ok(s)
}

fn cmd_gamma(knot: &KnotSpec, k: Option<i64>, common: &Common) -> Out {
    let c = complex_for(knot, common)?;
    let values: Vec<(i64, GammaValue)> = match k {
        Some(k) => vec![(k, gamma(&c, k)?)],
        None => {
            let h = h_field(&c, common.ring)?;
            gamma_function(&c, 0, h.max(0) + 1)?.values.into_iter().collect()
        }
    };
    if common.json {
        let m: serde_json::Map<String, Value> = values.iter().map(|(k, v)| (k.to_string(), Value::from(v.to_string()))).collect();
        return Ok(json_out(json!({"knot": knot.to_string(), "ring": common.ring.name(), "gamma": m})));
    }
    Ok(values.iter().map(|(k, v)| format!("Gamma({k}) = {v}\n")).collect())
}

fn cmd_h(knot: &KnotSpec, common: &Common) -> Out {
    let h = match common.ring {
        RingSpec::T4 => h_t4(knot)?,
        ring => h_field(&complex_for(knot, common)?, ring)?,
    };
    let sigma = signature(knot)?;
    if common.json {
        return Ok(json_out(
            json!({"knot": knot.to_string(), "ring": common.ring.name(), "h": h, "signature": sigma}),
        ));
    }
    Ok(format!("h = {h}\nsignature = {sigma}\n"))
}

fn cmd_bounds(knot: &KnotSpec, upper: Option<i64>, json: bool) -> Out {
    let b = concordance_bounds(knot, upper)?;
    if json {
        return Ok(json_out(Value::Array(b.iter().map(|r| r.to_json()).collect())));
    }
    Ok(b.iter().map(|r| format!("{r}\n")).collect())
}

fn cmd_ideal(knot: Option<KnotSpec>, k: Option<u32>, common: &Common) -> Out {
    if let Some(k) = k {
        let ideal = ideal_ik(k);
        let gr = ideal_ik_gradings(k);
        if common.json {
            return Ok(json_out(
                json!({"ideal": ideal.to_json(), "gradings": gr.iter().map(|g| g.to_string()).collect::<Vec<_>>()}),
            ));
        }
        return Ok(format!(
            "I^{k} = {ideal}\ngradings {}\n",
            gr.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
        ));
    }
    let knot = knot.ok_or_else(|| Failure::Usage("give a knot or --k".into()))?;
    let c = complex_for(
        &knot,
        &Common {
            ring: RingSpec::Generic,
            ..common.clone()
        },
    )?;
    let h = h_field(&c, RingSpec::Generic)?;
    let c = if common.ring == RingSpec::T4 { c.with_ring(RingSpec::T4) } else { c };
    let js = j_ideals_uniform(&c, h.min(0) - 1, h.max(0) + 1)?;
    let zh = z_hat_structured(&knot).ok();
    let bn = match (&zh, common.ring) {
        (Some(z), RingSpec::Char2) => Some(basechange_bn(&z.to_char2())?),
        _ => None,
    };
    let rank = hat_complex_rank(&complex_for(
        &knot,
        &Common {
            ring: RingSpec::Generic,
            ..common.clone()
        },
    )?)?;
    if common.json {
        let jm: serde_json::Map<String, Value> = js.iter().map(|(i, j)| (i.to_string(), j.to_json())).collect();
        return Ok(json_out(json!({
            "knot": knot.to_string(),
            "j": jm,
            "z_hat": zh.as_ref().map(|z| z.to_json()),
            "z_bn": bn.as_ref().map(|z| z.to_json()),
            "hat_free_rank": rank.free_rank,
        })));
    }
    let mut s = String::new();
    for (i, j) in &js {
        writeln!(s, "J_{i} = {j}").unwrap();
    }
    if let Some(z) = zh {
        writeln!(s, "z-hat = {z}").unwrap();
    }
    if let Some(b) = bn {
        writeln!(s, "z-BN = {b}").unwrap();
    }
    writeln!(s, "hat free rank = {}", rank.free_rank).unwrap();
    Ok(s)
}

fn cmd_cobordism(data: &CobordismData, gamma_k: Option<(i64, GammaValue)>, ring: RingSpec, json: bool) -> Out {
    let r = reducible_summary(data, ring)?;
    let h = h_shift_bound(data, ring);
    let g = gamma_k.map(|(k, g)| gamma_shift_bound(data, k, ring, &g)).transpose()?;
    let set = |s: &std::collections::BTreeSet<i64>| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    if json {
        return Ok(json_out(json!({
            "kappa_min": r.kappa_min.to_string(),
            "eta": r.eta.to_string(),
            "nu": r.nu_values.iter().collect::<Vec<_>>(),
            "nu_centered": r.nu_centered.iter().collect::<Vec<_>>(),
            "index": r.index_min,
            "level": r.level,
            "h_shift": h.as_ref().ok().map(|b| b.to_json()),
            "gamma_shift": g.as_ref().map(|b| b.to_json()),
        })));
    }
    let mut s = String::new();
    writeln!(s, "kappa_min = {}", r.kappa_min).unwrap();
    writeln!(s, "eta = {}", r.eta).unwrap();
    writeln!(s, "nu = {{{}}}  centered {{{}}}", set(&r.nu_values), set(&r.nu_centered)).unwrap();
    writeln!(s, "index = {}  level = {}", r.index_min, r.level.map_or("none".into(), |l| l.to_string())).unwrap();
    match h {
        Ok(b) => writeln!(s, "{b}").unwrap(),
        Err(e) => writeln!(s, "h_shift: {e}").unwrap(),
    }
    if let Some(b) = g {
        writeln!(s, "{b}").unwrap();
    }
    Ok(s)
}
