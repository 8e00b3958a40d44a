//! Command-line front end: compute Macdonald polynomials, limits, PBW normal forms, and run
//! the verification suites.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use macdaha::asymfunc::{limit_macdonald, tilde_E, AsymFn};
use macdaha::daharep::{apply_T, apply_T_inv, apply_X, apply_Y, check_eigen, macdonald_E};
use macdaha::pbw::{Engine, GenWord, Letter, PbwElem};
use macdaha::polyring::LaurentPoly;
use macdaha::suite::{run_criterion, suite_criteria, CriterionResult, RunConfig, SUITES};
use macdaha::weyl::{bruhat_leq, AsymIndex, Weight};

#[derive(Parser)]
#[command(name = "macdaha", version, about = "Exact DAHA, Macdonald and PBW computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// The nonsymmetric Macdonald polynomial E_λ.
    Macdonald {
        #[arg(long)]
        weight: String,
        /// Rank; the weight is padded with zeros up to k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The limit Macdonald function ℰ_λ in 𝓜_as coordinates.
    LimitMacdonald {
        #[arg(long)]
        weight: String,
    },
    /// The eigenfunction Ẽ_⟨λ|μ⟩, index given as "lambda|mu".
    TildeE {
        #[arg(long)]
        index: String,
    },
    /// Apply a word in T, X, Y (polynomial representation) to x^λ.
    Act {
        #[arg(long)]
        word: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// PBW normal form of a word in ℋ_k^+.
    Straighten {
        /// Word such as "Y1 X1"; may also be given with --word.
        word: Option<String>,
        #[arg(long = "word", id = "word_flag")]
        word_flag: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Bruhat comparison λ ≤ μ.
    Bruhat { lambda: String, mu: String },
    /// Run a verification suite; exit status 0 iff every check passes.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim().trim_matches(|c| c == '(' || c == ')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<i64>().with_context(|| format!("bad weight entry {:?}", p))).collect()
}

fn padded(weight: &str, k: Option<usize>) -> Result<Weight> {
    let mut w = parse_weight(weight)?;
    if let Some(k) = k {
        if k < w.len() {
            bail!("weight has {} entries but k = {}", w.len(), k);
        }
        w.resize(k, 0);
    }
    if w.is_empty() {
        bail!("empty weight");
    }
    Ok(w)
}

fn poly_output(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => {
            let terms: Vec<Value> = p.terms().iter().map(|(e, c)| json!({"exponents": e, "coeff": c.to_string()})).collect();
            json!({"rank": p.rank(), "terms": terms}).to_string()
        }
        Format::Csv => {
            let mut out = String::from("exponents,coeff\n");
            for (e, c) in p.terms() {
                let es: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                out += &format!("{},\"{}\"\n", es.join(";"), c);
            }
            out.trim_end().to_string()
        }
    }
}

fn asym_output(f: &AsymFn, format: Format) -> String {
    let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";");
    match format {
        Format::Text => f.to_string(),
        Format::Json => {
            let terms: Vec<Value> =
                f.to_mas_basis().iter().map(|(i, c)| json!({"lambda": i.lambda, "mu": i.mu, "coeff": c.to_string()})).collect();
            json!({"terms": terms}).to_string()
        }
        Format::Csv => {
            let mut out = String::from("lambda,mu,coeff\n");
            for (i, c) in f.to_mas_basis() {
                out += &format!("{},{},\"{}\"\n", join(&i.lambda), join(&i.mu), c);
            }
            out.trim_end().to_string()
        }
    }
}

fn pbw_output(e: &PbwElem, format: Format) -> String {
    let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";");
    match format {
        Format::Text => e.to_string(),
        Format::Json => {
            let terms: Vec<Value> = e.records().into_iter().map(|(mu, nu, w, c)| json!({"mu": mu, "nu": nu, "w": w, "coeff": c})).collect();
            json!({"rank": e.rank(), "terms": terms}).to_string()
        }
        Format::Csv => {
            let mut out = String::from("mu,nu,w,coeff\n");
            for (mu, nu, w, c) in e.records() {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                out += &format!("{},{},{},\"{}\"\n", join(&mu), join(&nu), ws.join(";"), c);
            }
            out.trim_end().to_string()
        }
    }
}

fn act(word: &str, lam: &[i64]) -> Result<LaurentPoly> {
    let k = lam.len();
    let w = GenWord::parse(word, k).map_err(|e| anyhow!(e))?;
    let mut f = LaurentPoly::x_pow(lam);
    for &l in w.letters.iter().rev() {
        f = match l {
            Letter::X(i) => apply_X(i, &f, 1),
            Letter::Y(i) => apply_Y(i, &f),
            Letter::T(i) => apply_T(i, &f),
            Letter::Tinv(i) => apply_T_inv(i, &f),
        }
        .map_err(|e| anyhow!(e))?;
    }
    Ok(f)
}

fn verify_output(suite: &str, results: &[CriterionResult], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = Vec::new();
            for r in results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                out.push(format!("criterion {} {} {} ({} checks)", r.id, status, r.name, r.checked));
                out.extend(r.failures.iter().map(|f| format!("    {}", f)));
            }
            out.join("\n")
        }
        Format::Json => {
            let crit: Vec<Value> = results
                .iter()
                .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed(), "checked": r.checked, "failures": r.failures}))
                .collect();
            json!({"suite": suite, "passed": results.iter().all(|r| r.passed()), "criteria": crit}).to_string()
        }
        Format::Csv => {
            let mut out = String::from("criterion,name,passed,checked,failures\n");
            for r in results {
                out += &format!("{},{},{},{},{}\n", r.id, r.name, r.passed(), r.checked, r.failures.len());
            }
            out.trim_end().to_string()
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Macdonald { weight, k } => {
            let lam = padded(&weight, k)?;
            let e = macdonald_E(&lam).map_err(|e| anyhow!(e))?;
            if !check_eigen(&lam).map_err(|e| anyhow!(e))? {
                bail!("eigen-equation check failed for E_{:?}", lam);
            }
            println!("{}", poly_output(&e, format));
        }
        Command::LimitMacdonald { weight } => {
            let lam = parse_weight(&weight)?;
            let e = limit_macdonald(&lam).map_err(|e| anyhow!(e))?;
            println!("{}", asym_output(&e, format));
        }
        Command::TildeE { index } => {
            let idx = AsymIndex::parse(&index).ok_or_else(|| anyhow!("bad index {:?}; expected \"lambda|mu\"", index))?;
            let e = tilde_E(&idx).map_err(|e| anyhow!(e))?;
            println!("{}", asym_output(&e, format));
        }
        Command::Act { word, weight, k } => {
            let lam = padded(&weight, k)?;
            println!("{}", poly_output(&act(&word, &lam)?, format));
        }
        Command::Straighten { word, word_flag, k } => {
            let word = word.or(word_flag).ok_or_else(|| anyhow!("missing word"))?;
            let w = GenWord::parse(&word, k).map_err(|e| anyhow!(e))?;
            let e = Engine::new(k).straighten(&w).map_err(|e| anyhow!(e))?;
            println!("{}", pbw_output(&e, format));
        }
        Command::Bruhat { lambda, mu } => {
            let (l, m) = (parse_weight(&lambda)?, parse_weight(&mu)?);
            let b = bruhat_leq(&l, &m).map_err(|e| anyhow!(e))?;
            match format {
                Format::Json => println!("{}", json!({"lambda": l, "mu": m, "leq": b})),
                Format::Csv => println!("lambda,mu,leq\n{:?},{:?},{}", l, m, b),
                Format::Text => println!("{}", b),
            }
        }
        Command::Verify { suite, max_rank, max_degree, seed } => {
            let ids = suite_criteria(&suite).ok_or_else(|| anyhow!("unknown suite {}", suite))?;
            let cfg = RunConfig { max_rank, max_degree, seed };
            let results: Vec<CriterionResult> = ids.iter().map(|&id| run_criterion(id, &cfg)).collect();
            println!("{}", verify_output(&suite, &results, format));
            return Ok(results.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}
