//! `hcc`: command-line front end.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a computed instance
//! contradicts a proven inequality (the instance is in the report).

mod groups;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hcc::bounds::{
    bound_elementary_abelian, bound_general, growth_iterate, verdict_3manifold_z2, BoundReport, BoundVerdict,
};
use hcc::covers::{build_cover, check_balance_pattern, hc_verdict, parse_homomorphism, parse_homomorphism_elementary, Homomorphism};
use hcc::groupring::{filtration_profile, filtration_profile_default, OrderedGroup};
use hcc::omega::{check_inequality_suite, omega_by_convolution};
use hcc::presentations::{complex_summary, normalize_presentation, parse_presentation, Presentation};
use hcc::selfcheck::{run_selfcheck, SelfcheckOptions};
use hcc::{Error, Prime, Result};

use output::{Format, Report};

#[derive(Parser)]
#[command(name = "hcc", version, about = "Mod-p homology of regular covers of presentation complexes")]
struct Cli {
    /// Output format; tables default to TSV, everything else to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of (1 + x + ... + x^(p-1))^r, or the inequality suite.
    Omega {
        #[arg(long)]
        p: u64,
        #[arg(long, required_unless_present = "inequalities")]
        r: Option<usize>,
        /// Evaluate the inequality family instead of one table.
        #[arg(long)]
        inequalities: bool,
        #[arg(long, default_value_t = 30)]
        r_max: usize,
        /// Primes for the dominance comparison (default: 2,3,5,7).
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Dimensions of the powers of the augmentation ideal of F_p[H].
    Ring {
        #[arg(long)]
        p: u64,
        /// Table file, or a product like Z4, Z2^3, Z2xZ4.
        #[arg(long)]
        group: String,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Presentation complex summary and normalized presentation.
    Present {
        #[arg(long)]
        pres: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Betti numbers of the cover and the total-rank verdict.
    Cover {
        #[arg(long)]
        pres: PathBuf,
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        p: u64,
        /// Target for element-index images (tuples imply (Z_p)^r).
        #[arg(long)]
        group: Option<String>,
        /// Relabel the target elements by a seeded random permutation.
        #[arg(long)]
        permute_seed: Option<u64>,
    },
    /// Lower bounds on b1 of a normal subgroup with the given quotient.
    Bounds {
        #[arg(long)]
        p: u64,
        /// b1(G; F_p); read from --pres when omitted.
        #[arg(long)]
        b1: Option<u64>,
        /// Witness deficiency; read from --pres when omitted.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        /// Quotient (Z_p)^r.
        #[arg(long, conflicts_with = "group")]
        r: Option<usize>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        pres: Option<PathBuf>,
        #[arg(long, requires = "pres")]
        hom: Option<PathBuf>,
        /// Compare with b1 of the cover built from --pres and --hom.
        #[arg(long, requires = "hom")]
        actual: bool,
        /// Compare with a known b1(N; F_p).
        #[arg(long, conflicts_with = "actual")]
        actual_b1: Option<u64>,
    },
    /// Closed 3-manifolds with a free (Z_2)^r action.
    Manifold {
        /// b1(Q; F_2) of the orbit space.
        #[arg(long)]
        b1: u64,
        #[arg(long)]
        r: usize,
    },
    /// Iterate passing to the kernel onto H_1(G; F_p).
    Iterate {
        #[arg(long)]
        pres: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        steps: usize,
    },
    /// Run every invariant suite and the reference corpus.
    Selfcheck {
        #[arg(long, default_value_t = SelfcheckOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SelfcheckOptions::default().cases)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.body);
            if report.falsified {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Inconsistent(format!("cannot read {}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation> {
    parse_presentation(&read(path)?)
}

fn load_hom(path: &Path, pres: &Presentation, group: Option<&OrderedGroup>, p: Prime) -> Result<Homomorphism> {
    let text = read(path)?;
    match group {
        Some(g) => parse_homomorphism(&text, pres, g, p),
        None => parse_homomorphism_elementary(&text, pres, p),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn run(cli: Cli) -> Result<Report> {
    let format = cli.format;
    let json_or = |v: Value, tsv: &dyn Fn(&Value) -> String| match format.unwrap_or(Format::Json) {
        Format::Json => output::json(&v),
        Format::Tsv => tsv(&v),
    };
    match cli.command {
        Command::Omega { p, r, inequalities, r_max, primes } => {
            let p = Prime::new(p)?;
            if inequalities {
                let primes = if primes.is_empty() { vec![2, 3, 5, 7] } else { primes };
                let primes = primes.into_iter().map(Prime::new).collect::<Result<Vec<_>>>()?;
                let report = check_inequality_suite(r_max, &primes)?;
                let body = match format.unwrap_or(Format::Tsv) {
                    Format::Json => output::json(&to_value(&report)),
                    Format::Tsv => {
                        let rows = to_value(&report.rows);
                        let rows = rows.as_array().into_iter().flatten().map(|row| {
                            ["name", "param", "value", "lhs", "rhs", "holds", "equality"]
                                .iter()
                                .map(|k| row[k].clone())
                                .collect()
                        });
                        let mut s = output::table(&["name", "param", "value", "lhs", "rhs", "holds", "equality"], rows);
                        s.push('\n');
                        s.push_str(&output::table(
                            &["claim", "passed", "statement", "detail"],
                            report.claims.iter().map(|c| {
                                vec![c.name.clone().into(), c.passed.into(), c.statement.clone().into(), c.detail.clone().into()]
                            }),
                        ));
                        s
                    }
                };
                return Ok(Report::ok(body));
            }
            let r = r.expect("clap requires r");
            let table = omega_by_convolution(p, r)?;
            let pis = table.pi_values();
            let body = match format.unwrap_or(Format::Tsv) {
                Format::Json => output::json(&json!({
                    "p": p.get(),
                    "r": r,
                    "omega": to_value(&table)["coeffs"].clone(),
                    "pi": pis.iter().map(hcc::json::bigint_value).collect::<Vec<_>>(),
                })),
                Format::Tsv => output::table(
                    &["p", "r", "k", "omega", "pi"],
                    table.coeffs().iter().zip(&pis).enumerate().map(|(k, (c, pi))| {
                        vec![
                            p.get().into(),
                            r.into(),
                            k.into(),
                            c.to_string().into(),
                            pi.to_string().into(),
                        ]
                    }),
                ),
            };
            Ok(Report::ok(body))
        }
        Command::Ring { p, group, k_max } => {
            let p = Prime::new(p)?;
            let h = groups::resolve(&group)?;
            let profile = match k_max {
                Some(k) => filtration_profile(p, &h, k)?,
                None => filtration_profile_default(p, &h)?,
            };
            let body = match format.unwrap_or(Format::Json) {
                Format::Json => output::json(&to_value(&profile)),
                Format::Tsv => output::table(
                    &["k", "dim", "lambda"],
                    profile.delta_dims.iter().enumerate().map(|(k, &d)| {
                        vec![k.into(), d.into(), profile.lambdas.get(k).map_or(Value::Null, |&l| l.into())]
                    }),
                ),
            };
            Ok(Report::ok(body))
        }
        Command::Present { pres, p } => {
            let p = Prime::new(p)?;
            let pres = load_presentation(&pres)?;
            let summary = complex_summary(&pres, p)?;
            let norm = normalize_presentation(&pres, p)?;
            let names = pres.generator_names();
            let v = json!({
                "p": p.get(),
                "presentation": pres.render(),
                "generators": pres.n_generators(),
                "relators": pres.relators().len(),
                "deficiency": pres.deficiency(),
                "summary": to_value(&summary),
                "normalized": {
                    "presentation": norm.presentation.render(),
                    "generator_words": norm.generator_words.iter().map(|w| w.render(names)).collect::<Vec<_>>(),
                    "diagonal": norm.snf.diagonal.iter().map(|d| d.value()).collect::<Vec<_>>(),
                },
            });
            Ok(Report::ok(json_or(v, &output::fields)))
        }
        Command::Cover { pres, hom, p, group, permute_seed } => {
            let p = Prime::new(p)?;
            let pres = load_presentation(&pres)?;
            let group = group.as_deref().map(groups::resolve).transpose()?;
            let mut hom = load_hom(&hom, &pres, group.as_ref(), p)?;
            if let Some(seed) = permute_seed {
                let mut perm: Vec<usize> = (0..hom.target().size()).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                hom = hom.reordered(&perm)?;
            }
            let cover = build_cover(&pres, &hom, p)?;
            let verdict = match hom.target().elementary_abelian_rank(p) {
                Some(_) => Some(hc_verdict(&cover)?),
                None => None,
            };
            let falsified = verdict.as_ref().is_some_and(|v| v.falsifies());
            let v = json!({
                "p": p.get(),
                "presentation": pres.render(),
                "target": hom.target().label(),
                "order": hom.target().size(),
                "images": hom.images(),
                "surjective": hom.is_surjective(),
                "b": cover.betti(),
                "hrk": cover.hrk,
                "euler": cover.euler,
                "components": cover.components(),
                "balanced": check_balance_pattern(&cover),
                "verdict": to_value(&verdict),
            });
            Ok(Report { body: json_or(v, &output::fields), falsified })
        }
        Command::Bounds { p, b1, d, r, group, pres, hom, actual, actual_b1 } => {
            let p = Prime::new(p)?;
            let pres = pres.as_deref().map(load_presentation).transpose()?;
            let (b1, d) = match (&pres, b1, d) {
                (_, Some(b1), Some(d)) => (b1, d),
                (Some(pr), b1, d) => (
                    b1.map_or_else(|| complex_summary(pr, p).map(|s| s.b1 as u64), Ok)?,
                    d.unwrap_or_else(|| pr.deficiency()),
                ),
                (None, _, _) => {
                    return Err(Error::Inconsistent("give --b1 and --d, or a presentation with --pres".into()));
                }
            };
            let group = group.as_deref().map(groups::resolve).transpose()?;
            let hom = match (&pres, hom) {
                (Some(pr), Some(path)) => Some(load_hom(&path, pr, group.as_ref(), p)?),
                _ => None,
            };
            let mut report: BoundReport = match (r, &group, &hom) {
                (Some(r), _, _) => bound_elementary_abelian(b1, d, p, r)?,
                (None, Some(g), _) => bound_general(b1, d, &filtration_profile_default(p, g)?)?,
                (None, None, Some(h)) => bound_general(b1, d, &filtration_profile_default(p, h.target())?)?,
                (None, None, None) => {
                    return Err(Error::Inconsistent("give the quotient with --r, --group or --hom".into()));
                }
            };
            if actual {
                let (pr, h) = (pres.as_ref().expect("clap requires pres"), hom.as_ref().expect("clap requires hom"));
                if !h.is_surjective() {
                    return Err(Error::Inconsistent("--actual needs a surjective homomorphism".into()));
                }
                let expected_order = BigInt::from(h.target().size());
                if report.order != expected_order {
                    return Err(Error::Inconsistent("the quotient does not match the homomorphism target".into()));
                }
                report = report.with_actual(build_cover(pr, h, p)?.b1 as u64);
            } else if let Some(a) = actual_b1 {
                report = report.with_actual(a);
            }
            let falsified = report.verdict == BoundVerdict::Violated;
            let v = to_value(&report);
            let body = json_or(v, &|_| {
                output::table(
                    &["k", "bound", "best"],
                    report.bounds.iter().map(|b| {
                        vec![b.k.into(), b.value.to_string().into(), (b.k == report.best.k).into()]
                    }),
                )
            });
            Ok(Report { body, falsified })
        }
        Command::Manifold { b1, r } => {
            let v = to_value(&verdict_3manifold_z2(b1, r)?);
            Ok(Report::ok(json_or(v, &output::fields)))
        }
        Command::Iterate { pres, p, steps } => {
            let p = Prime::new(p)?;
            let pres = load_presentation(&pres)?;
            let report = growth_iterate(&pres, p, steps)?;
            let falsified = report.stages.iter().any(|s| !s.holds);
            let v = to_value(&report);
            let body = json_or(v.clone(), &|_| {
                let cols = ["stage", "index", "generators", "relators", "deficiency", "b1", "lower_bound", "nielsen_schreier", "holds"];
                let mut s = output::table(
                    &cols,
                    v["stages"].as_array().into_iter().flatten().map(|st| cols.iter().map(|c| st[c].clone()).collect()),
                );
                if let Some(why) = &report.stopped {
                    s.push_str(&format!("# stopped: {why}\n"));
                }
                s
            });
            Ok(Report { body, falsified })
        }
        Command::Selfcheck { seed, cases } => {
            let report = run_selfcheck(&SelfcheckOptions { seed, cases })?;
            let v = to_value(&report);
            let body = json_or(v, &|_| {
                let mut s = output::table(
                    &["suite", "check", "instances", "passed", "counterexample"],
                    report.checks.iter().map(|c| {
                        vec![
                            c.suite.into(),
                            c.name.clone().into(),
                            c.instances.into(),
                            c.passed.into(),
                            c.counterexample.clone().unwrap_or(Value::Null),
                        ]
                    }),
                );
                s.push('\n');
                s.push_str(&output::table(
                    &["suite", "note", "holds_as_printed", "detail"],
                    report.notes.iter().map(|n| {
                        vec![n.suite.into(), n.name.clone().into(), n.holds_as_printed.into(), n.detail.clone().into()]
                    }),
                ));
                s
            });
            Ok(Report { body, falsified: report.falsified })
        }
    }
}
