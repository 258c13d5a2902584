mod document;

use clap::{Parser, Subcommand};
use document::MatrixDocument;
use std::io::Read;
use superchar::oracle::DEFAULT_SEED;
use superchar::tolerances::default_membership_tol;
use superchar::transforms::{dct_matrix, dft_matrix, dst_matrix};
use superchar::{circulant, dct, dst};
use superchar::{CirculantElement, DctElement, DstElementS, Error};

/// Transforms and matrix algebras from multiplicative symmetries of Z/nZ.
#[derive(Parser)]
#[command(name = "superchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a transform or basis matrix as a JSON document (or CSV when real)
    Gen {
        /// dft | dct | dst | dct-basis | dst-basis-s | dst-basis-t | circulant-basis
        #[arg(long)]
        kind: String,
        /// Modulus the construction lives over
        #[arg(long)]
        n: u64,
        /// Basis index; required for the *-basis kinds
        #[arg(long)]
        index: Option<usize>,
        /// json | csv
        #[arg(long, default_value = "json")]
        format: String,
        /// Keep basis entries as exact integer pairs a + b*sqrt(2)
        #[arg(long)]
        exact: bool,
    },
    /// Test a matrix document for algebra membership and print its parameters
    Check {
        /// circulant | dct | dst
        #[arg(long)]
        algebra: String,
        /// Residual tolerance; scales with the matrix magnitude when omitted
        #[arg(long)]
        tol: Option<f64>,
        /// Input path, or '-' for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Solve element * x = rhs given parameter and right-hand-side documents
    Solve {
        /// circulant | dct | dst
        #[arg(long)]
        algebra: String,
        /// Eigenvalues at or below this magnitude count as singular
        #[arg(long, default_value_t = 1e-12)]
        singular_tol: f64,
        /// Parameter vector document (1-row)
        params: String,
        /// Right-hand-side vector document (1-row)
        rhs: String,
    },
    /// Run the self-verification suite over a range of moduli
    Verify {
        #[arg(long, default_value_t = 2)]
        n_min: u64,
        #[arg(long, default_value_t = 16)]
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Emit the full report as JSON instead of the summary table
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gen {
            kind,
            n,
            index,
            format,
            exact,
        } => gen(&kind, n, index, &format, exact),
        Command::Check { algebra, tol, input } => check(&algebra, tol, &input),
        Command::Solve {
            algebra,
            singular_tol,
            params,
            rhs,
        } => solve(&algebra, singular_tol, &params, &rhs),
        Command::Verify {
            n_min,
            n_max,
            seed,
            json,
        } => verify(n_min, n_max, seed, json),
    };
    std::process::exit(code);
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn domain_exit(e: &Error) -> i32 {
    eprintln!("error: {e}");
    match e {
        Error::NotInAlgebra { .. }
        | Error::SingularElement { .. }
        | Error::SingularConversion { .. } => 1,
        _ => 2,
    }
}

fn emit(doc: &MatrixDocument, format: &str) -> i32 {
    match format {
        "json" => {
            println!("{}", serde_json::to_string_pretty(doc).unwrap());
            0
        }
        "csv" => match doc.to_csv() {
            Ok(text) => {
                print!("{text}");
                0
            }
            Err(msg) => usage(&msg),
        },
        _ => usage(&format!("unknown format '{format}'")),
    }
}

fn gen(kind: &str, n: u64, index: Option<usize>, format: &str, exact: bool) -> i32 {
    let is_basis = matches!(
        kind,
        "dct-basis" | "dst-basis-s" | "dst-basis-t" | "circulant-basis"
    );
    if exact && !is_basis {
        return usage("--exact applies to basis kinds only");
    }
    if index.is_some() && !is_basis {
        return usage("--index applies to basis kinds only");
    }
    let doc = match kind {
        "dft" => MatrixDocument::from_complex(n, kind, &dft_matrix(n)),
        "dct" => MatrixDocument::from_f64(n, kind, &dct_matrix(n)),
        "dst" => MatrixDocument::from_f64(n, kind, &dst_matrix(n)),
        _ if is_basis => {
            let Some(i) = index else {
                return usage(&format!("--index is required for kind '{kind}'"));
            };
            let built = match kind {
                "dct-basis" => dct::basis(n, i),
                "dst-basis-s" => dst::s_basis(n, i),
                "dst-basis-t" => dst::t_basis(n, i),
                _ => circulant::shift_basis(n, i),
            };
            match built {
                Ok(m) if exact => MatrixDocument::from_exact(n, kind, &m),
                Ok(m) => MatrixDocument::from_f64(n, kind, &m.to_f64()),
                Err(e) => return domain_exit(&e),
            }
        }
        _ => return usage(&format!("unknown kind '{kind}'")),
    };
    emit(&doc, format)
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    }
}

fn read_document(path: &str) -> Result<MatrixDocument, String> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {path}: {e}"))
}

fn check(algebra: &str, tol: Option<f64>, input: &str) -> i32 {
    let doc = match read_document(input) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let m = match doc.to_complex_matrix() {
        Ok(m) => m,
        Err(msg) => return usage(&msg),
    };
    let tol = tol.unwrap_or_else(|| default_membership_tol(&m));
    let result = match algebra {
        "circulant" => circulant::membership(&m, doc.n, tol).map(|e| e.params().to_vec()),
        "dct" => dct::membership(&m, doc.n, tol).map(|e| e.params().to_vec()),
        "dst" => dst::membership(&m, doc.n, tol).map(|e| e.params().to_vec()),
        _ => return usage(&format!("unknown algebra '{algebra}'")),
    };
    match result {
        Ok(params) => {
            eprintln!(
                "member of the {algebra} algebra at n = {} (tolerance {tol:.3e})",
                doc.n
            );
            let kind = format!("{algebra}-params");
            let out = MatrixDocument::row_vector(doc.n, &kind, &params);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            0
        }
        Err(e) => domain_exit(&e),
    }
}

fn solve(algebra: &str, singular_tol: f64, params_path: &str, rhs_path: &str) -> i32 {
    let params_doc = match read_document(params_path) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let rhs_doc = match read_document(rhs_path) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    if params_doc.n != rhs_doc.n {
        return usage(&format!(
            "parameter document is for n = {} but right-hand side is for n = {}",
            params_doc.n, rhs_doc.n
        ));
    }
    let n = params_doc.n;
    let params = match params_doc.to_complex_vector() {
        Ok(v) => v,
        Err(msg) => return usage(&msg),
    };
    let rhs = match rhs_doc.to_complex_vector() {
        Ok(v) => v,
        Err(msg) => return usage(&msg),
    };
    let solved = match algebra {
        "circulant" => CirculantElement::new(n, params).and_then(|e| e.solve(&rhs, singular_tol)),
        "dct" => DctElement::new(n, params).and_then(|e| e.solve(&rhs, singular_tol)),
        "dst" => DstElementS::new(n, params).and_then(|e| e.solve(&rhs, singular_tol)),
        _ => return usage(&format!("unknown algebra '{algebra}'")),
    };
    match solved {
        Ok(x) => {
            let kind = format!("{algebra}-solution");
            let out = MatrixDocument::row_vector(n, &kind, &x);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            0
        }
        Err(e) => domain_exit(&e),
    }
}

fn verify(n_min: u64, n_max: u64, seed: u64, json: bool) -> i32 {
    match superchar::run_suite(n_min, n_max, seed) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", report.render_table());
            }
            if report.all_pass() {
                0
            } else {
                1
            }
        }
        Err(e) => domain_exit(&e),
    }
}
