//! Command line calculator for the mod-2 cohomology of symmetric groups.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use symhopf::cohomology::{self, GatheredMonomial};
use symhopf::duality::Duality;
use symhopf::f2::F2Sum;
use symhopf::generators::{feshbach_generators, sw_class, sw_component, sw_coproduct};
use symhopf::homology;
use symhopf::invariants::to_invariant;
use symhopf::kudo_araki;

use symhopf_cli::json::{self, VerifyJson};
use symhopf_cli::parse::{self, ParseError};
use symhopf_cli::render;
use symhopf_cli::verify::{self, Limits, SuiteReport};

#[derive(Parser)]
#[command(
    name = "symhopf",
    version,
    about = "Exact calculator for the mod-2 cohomology of all symmetric groups",
    after_help = "Cohomology expressions use g[l,n], u[m], 1, with ^ (cup power), \
. (cup), o (transfer), + (sum).  Homology expressions use q[a,b,...], i, 1, with \
^ (power), * (product), + (sum)."
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cup product of two cohomology expressions.
    Cup {
        /// First factor.
        x: String,
        /// Second factor.
        y: String,
    },
    /// Transfer product of two cohomology expressions.
    Odot {
        /// First factor.
        x: String,
        /// Second factor.
        y: String,
    },
    /// Coproduct of an expression: the component-splitting coproduct of
    /// a cohomology expression, or a homology coproduct under a flag.
    Coprod {
        /// Expression to expand.
        x: String,
        /// Homology transfer coproduct instead.
        #[arg(long, conflicts_with = "cup")]
        transfer: bool,
        /// Homology cup coproduct instead.
        #[arg(long)]
        cup: bool,
    },
    /// Kronecker pairing of a cohomology and a homology expression.
    Pair {
        /// Cohomology side.
        x: String,
        /// Homology side.
        m: String,
    },
    /// Additive basis of one bidegree.
    Basis {
        /// Component, the number of points permuted.
        #[arg(long)]
        component: u32,
        /// Cohomological degree.
        #[arg(long)]
        degree: u64,
        /// List the homology basis.
        #[arg(long, conflicts_with = "cohomology")]
        homology: bool,
        /// List the cohomology basis (the default).
        #[arg(long)]
        cohomology: bool,
    },
    /// Rewrite a composite operation sequence into admissible form.
    Normalize {
        /// The sequence, written q[a,b,...].
        q: String,
    },
    /// Ring generators of one component, as restriction-detected classes.
    Feshbach {
        /// Component, the number of points permuted.
        #[arg(long)]
        component: u32,
    },
    /// Stiefel-Whitney class w_{2^k(2^l-1)} of the permutation
    /// representation on 2^(k+l) points.
    Sw {
        /// Transfer depth.
        #[arg(long)]
        k: u32,
        /// Cup depth.
        #[arg(long)]
        l: u32,
        /// Component to express the class on (default 2^(k+l)).
        #[arg(long)]
        component: Option<u32>,
    },
    /// Coproduct of a Stiefel-Whitney class via bundle splittings.
    SwCoprod {
        /// Transfer depth.
        #[arg(long)]
        k: u32,
        /// Cup depth.
        #[arg(long)]
        l: u32,
    },
    /// Image of a cohomology expression in the invariant-theoretic model.
    InvtMap {
        /// Expression to map.
        x: String,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name: dimensions, pairing, oracle, examples, axioms,
        /// adem, subalgebra, feshbach, sw, invariants, or all.
        suite: String,
        /// Override the component range of the sweeping suites.
        #[arg(long)]
        max_component: Option<u32>,
        /// Override the degree range of the sweeping suites.
        #[arg(long)]
        max_degree: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn print_coh(sum: &F2Sum<GatheredMonomial>, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string(&json::coh_sum(sum)).unwrap());
    } else {
        println!("{sum}");
    }
}

fn run(cli: Cli) -> Result<ExitCode, ParseError> {
    match cli.cmd {
        Cmd::Cup { x, y } => {
            let xs = parse::cohomology_expr(&x)?;
            let ys = parse::cohomology_expr(&y)?;
            let result = cohomology::cup_sum(&xs, &ys);
            if result.is_zero() && !xs.is_zero() && !ys.is_zero() {
                let cx: std::collections::BTreeSet<u32> =
                    xs.iter().map(GatheredMonomial::component).collect();
                let cy: std::collections::BTreeSet<u32> =
                    ys.iter().map(GatheredMonomial::component).collect();
                if cx.is_disjoint(&cy) {
                    eprintln!(
                        "note: the factors live on disjoint components, so every cup product vanishes"
                    );
                }
            }
            print_coh(&result, cli.json);
        }
        Cmd::Odot { x, y } => {
            let xs = parse::cohomology_expr(&x)?;
            let ys = parse::cohomology_expr(&y)?;
            print_coh(&cohomology::transfer_sum(&xs, &ys), cli.json);
        }
        Cmd::Coprod { x, transfer, cup } => {
            if transfer || cup {
                let xs = parse::homology_expr(&x)?;
                let mut out = F2Sum::zero();
                for t in xs.iter() {
                    out += if transfer {
                        homology::transfer_coproduct(t)
                    } else {
                        homology::cup_coproduct(t)
                    };
                }
                if cli.json {
                    let terms: Vec<_> = out
                        .iter()
                        .map(|(l, r)| json::TensorJson {
                            left: json::hom_term(l),
                            right: json::hom_term(r),
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&terms).unwrap());
                } else {
                    println!("{}", render::tensor_sum(&out));
                }
            } else {
                let xs = parse::cohomology_expr(&x)?;
                let mut out = F2Sum::zero();
                for t in xs.iter() {
                    out += cohomology::coproduct(t);
                }
                if cli.json {
                    let terms: Vec<_> = out
                        .iter()
                        .map(|(l, r)| json::TensorJson {
                            left: json::coh_term(l),
                            right: json::coh_term(r),
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&terms).unwrap());
                } else {
                    println!("{}", render::tensor_sum(&out));
                }
            }
        }
        Cmd::Pair { x, m } => {
            let xs = parse::cohomology_expr(&x)?;
            let ms = parse::homology_expr(&m)?;
            let mut du = Duality::new();
            let mut value = false;
            for a in xs.iter() {
                for b in ms.iter() {
                    value ^= du.pair(a, b);
                }
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&json::PairJson { value: u8::from(value) }).unwrap()
                );
            } else {
                println!("{}", u8::from(value));
            }
        }
        Cmd::Basis { component, degree, homology: hom, cohomology: _ } => {
            if hom {
                let b = homology::basis(component, degree);
                if cli.json {
                    let terms: Vec<_> = b.iter().map(json::hom_term).collect();
                    println!("{}", serde_json::to_string(&terms).unwrap());
                } else {
                    for m in b {
                        println!("{m}");
                    }
                }
            } else {
                let b = cohomology::basis(component, degree);
                if cli.json {
                    let terms: Vec<_> = b.iter().map(json::coh_term).collect();
                    println!("{}", serde_json::to_string(&terms).unwrap());
                } else {
                    for m in b {
                        println!("{m}");
                    }
                }
            }
        }
        Cmd::Normalize { q } => {
            let entries = parse::qseq_only(&q)?;
            let normal = kudo_araki::normalize(&entries);
            if cli.json {
                let seqs: Vec<Vec<u32>> =
                    normal.iter().map(|s| s.entries().to_vec()).collect();
                println!("{}", serde_json::to_string(&seqs).unwrap());
            } else {
                println!("{normal}");
            }
        }
        Cmd::Feshbach { component } => {
            let gens = feshbach_generators(component);
            if cli.json {
                #[derive(serde::Serialize)]
                struct GenJson {
                    partition: Vec<u32>,
                    degree: u64,
                    class: json::CohTermJson,
                }
                let rows: Vec<GenJson> = gens
                    .iter()
                    .map(|p| GenJson {
                        partition: p.entries().to_vec(),
                        degree: p.degree(),
                        class: json::coh_term(&p.class(component)),
                    })
                    .collect();
                println!("{}", serde_json::to_string(&rows).unwrap());
            } else {
                for p in &gens {
                    println!("{p}  degree {}  class {}", p.degree(), p.class(component));
                }
            }
        }
        Cmd::Sw { k, l, component } => {
            let m = component.unwrap_or_else(|| sw_component(k, l));
            let mut du = Duality::new();
            let class = sw_class(k, l, m, &mut du);
            print_coh(&class, cli.json);
        }
        Cmd::SwCoprod { k, l } => {
            let mut du = Duality::new();
            let out = sw_coproduct(k, l, &mut du);
            if cli.json {
                let terms: Vec<_> = out
                    .iter()
                    .map(|(left, right)| json::TensorJson {
                        left: json::coh_term(left),
                        right: json::coh_term(right),
                    })
                    .collect();
                println!("{}", serde_json::to_string(&terms).unwrap());
            } else {
                println!("{}", render::tensor_sum(&out));
            }
        }
        Cmd::InvtMap { x } => {
            let xs = parse::cohomology_expr(&x)?;
            let mut out = F2Sum::zero();
            for t in xs.iter() {
                out += to_invariant(t);
            }
            if cli.json {
                #[derive(serde::Serialize)]
                struct FactorJson {
                    set: Vec<u32>,
                    exponent: u32,
                }
                #[derive(serde::Serialize)]
                struct TermJson {
                    factors: Vec<FactorJson>,
                }
                let terms: Vec<TermJson> = out
                    .iter()
                    .map(|t| TermJson {
                        factors: t
                            .factors()
                            .map(|(mask, exp)| FactorJson {
                                set: (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
                                exponent: exp,
                            })
                            .collect(),
                    })
                    .collect();
                println!("{}", serde_json::to_string(&terms).unwrap());
            } else {
                println!("{out}");
            }
        }
        Cmd::Verify { suite, max_component, max_degree } => {
            let mut bidegrees = Limits::bidegrees();
            let mut oracle = Limits::oracle();
            if let Some(c) = max_component {
                bidegrees.max_component = c;
                oracle.max_component = c;
            }
            if let Some(d) = max_degree {
                bidegrees.max_degree = d;
                oracle.max_degree = d;
            }
            let Some(reports) = verify::by_name(&suite, bidegrees, oracle) else {
                eprintln!(
                    "unknown suite `{suite}`; expected one of dimensions, pairing, oracle, \
examples, axioms, adem, subalgebra, feshbach, sw, invariants, all"
                );
                return Ok(ExitCode::from(2));
            };
            let failed = report_suites(&reports, cli.json);
            return Ok(ExitCode::from(u8::from(failed)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_suites(reports: &[SuiteReport], as_json: bool) -> bool {
    let mut any_failed = false;
    if as_json {
        let rows: Vec<VerifyJson> = reports
            .iter()
            .map(|r| VerifyJson {
                suite: r.suite.to_string(),
                checks: r.checks,
                passed: r.passed(),
                failed: r.failures.clone(),
            })
            .collect();
        println!("{}", serde_json::to_string(&rows).unwrap());
        any_failed = reports.iter().any(|r| !r.ok());
    } else {
        for r in reports {
            let status = if r.ok() { "ok" } else { "FAILED" };
            println!("{}: {} of {} checks passed ... {status}", r.suite, r.passed(), r.checks);
            for f in &r.failures {
                println!("    {f}");
            }
            if !r.ok() {
                any_failed = true;
            }
        }
    }
    any_failed
}
