//! Argument handling and command dispatch for the `torus-growth` binary.

mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use torus_growth::formulas::denominator_g;
use torus_growth::formulas::{growth_generalized_odd, main_growth_function, parity_assembly};
use torus_growth::group::{sphere_counts_bfs, sphere_counts_grammar};
use torus_growth::spectral::{perron_check, perron_scan, smallest_positive_root, support_gcd};
use torus_growth::{series_expand, RationalFunction, SeriesPrefix, TorusParams};

pub use report::{GeneralReport, RateReport, Render, SeriesReport, Status, VerificationRecord};

#[derive(Parser, Debug)]
#[command(
    name = "torus-growth",
    version,
    about = "Growth series of torus link groups"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    None,
    Bfs,
    Grammar,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Growth function and sphere sizes a_0..a_N
    Series {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Oracle::None)]
        oracle: Oracle,
    },
    /// Radius of convergence and growth rate
    Rate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
    },
    /// Dominance of the growth rate over the other zeros of g*
    Perron {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = torus_growth::spectral::DEFAULT_MARGIN)]
        margin: f64,
    },
    /// Perron reports for every 2 <= p <= q <= max
    PerronScan {
        #[arg(long)]
        max: u32,
        #[arg(long, default_value_t = torus_growth::spectral::DEFAULT_MARGIN)]
        margin: f64,
    },
    /// Cross-check every route and oracle up to N
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Growth function for several odd factors
    General {
        #[arg(long, value_delimiter = ',', required = true)]
        list: Vec<u32>,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(torus_growth::Error),
    #[error("{0}")]
    Compute(torus_growth::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

fn usage(e: torus_growth::Error) -> CliError {
    CliError::Usage(e)
}

fn compute(e: torus_growth::Error) -> CliError {
    CliError::Compute(e)
}

/// Rendered output and whether every requested comparison agreed.
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

fn render<R: Render>(value: &R, format: Format) -> String {
    match format {
        Format::Text => value.text(),
        Format::Csv => value.csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (output, success) = match &cli.command {
        Command::Series {
            p,
            q,
            terms,
            oracle,
        } => {
            let r = series(TorusParams::new(*p, *q).map_err(usage)?, *terms, *oracle)?;
            (render(&r, cli.format), r.matches != Some(false))
        }
        Command::Rate { p, q, tol } => {
            let r = rate(TorusParams::new(*p, *q).map_err(usage)?, *tol)?;
            (render(&r, cli.format), true)
        }
        Command::Perron { p, q, margin } => {
            let params = TorusParams::new(*p, *q).map_err(usage)?;
            let r = perron_check(params, *margin).map_err(compute)?;
            (render(&r, cli.format), true)
        }
        Command::PerronScan { max, margin } => {
            if *max < 2 {
                return Err(usage(torus_growth::Error::InvalidParams {
                    p: *max,
                    q: *max,
                }));
            }
            let r = perron_scan(*max, *margin).map_err(compute)?;
            (render(&r, cli.format), true)
        }
        Command::Verify { p, q, terms } => {
            let r = verify(TorusParams::new(*p, *q).map_err(usage)?, *terms)?;
            (render(&r, cli.format), r.status == Status::Ok)
        }
        Command::General { list, terms } => {
            let r = general(list, *terms)?;
            (render(&r, cli.format), true)
        }
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &output)?;
            Ok(Outcome {
                output: String::new(),
                success,
            })
        }
        None => Ok(Outcome { output, success }),
    }
}

fn counts_prefix(counts: &[u64]) -> SeriesPrefix {
    SeriesPrefix::new(counts.iter().copied().map(BigInt::from).collect())
}

pub fn series(params: TorusParams, n: usize, oracle: Oracle) -> Result<SeriesReport, CliError> {
    let formula = main_growth_function(params);
    let terms = series_expand(&formula, n).map_err(compute)?;
    let bfs = match oracle {
        Oracle::Bfs | Oracle::Both => Some(counts_prefix(
            &sphere_counts_bfs(params, n).map_err(compute)?.counts,
        )),
        _ => None,
    };
    let grammar = match oracle {
        Oracle::Grammar | Oracle::Both => {
            Some(counts_prefix(&sphere_counts_grammar(params, n).counts))
        }
        _ => None,
    };
    let matches = (oracle != Oracle::None).then(|| {
        [&bfs, &grammar]
            .into_iter()
            .flatten()
            .all(|o| o.terms() == terms.terms())
    });
    Ok(SeriesReport {
        p: params.p(),
        q: params.q(),
        terms: n,
        formula,
        series: terms,
        bfs,
        grammar,
        matches,
    })
}

pub fn rate(params: TorusParams, tol: f64) -> Result<RateReport, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage(torus_growth::Error::Parse(format!(
            "tolerance must be positive, got {tol}"
        ))));
    }
    let g = denominator_g(params);
    let r0 = if (params.p(), params.q()) == (2, 2) {
        1.0
    } else {
        smallest_positive_root(&g, tol).map_err(compute)?
    };
    Ok(RateReport {
        p: params.p(),
        q: params.q(),
        r0,
        omega: 1.0 / r0,
        lemma_gcd: support_gcd(&g).map_err(compute)?,
    })
}

/// First index where the series of two rational functions differ, or
/// `None` if the functions are equal. Unequal functions differ within the
/// first `deg(n1 d2 - n2 d1) + 1` coefficients.
fn first_difference(a: &RationalFunction, b: &RationalFunction) -> Result<Option<usize>, CliError> {
    if a == b {
        return Ok(None);
    }
    let cross = a.num() * b.den() - b.num() * a.den();
    let len = cross.degree().unwrap_or(0);
    let sa = series_expand(a, len).map_err(compute)?;
    let sb = series_expand(b, len).map_err(compute)?;
    Ok(sa.terms().iter().zip(sb.terms()).position(|(x, y)| x != y))
}

fn first_count_difference(reference: &SeriesPrefix, counts: &[u64]) -> Option<usize> {
    reference
        .terms()
        .iter()
        .zip(counts)
        .position(|(a, &b)| *a != BigInt::from(b))
}

pub fn verify(params: TorusParams, n: usize) -> Result<VerificationRecord, CliError> {
    let unified = main_growth_function(params);
    let reference = series_expand(&unified, n).map_err(compute)?;
    let (route, assembled) = parity_assembly(params);
    let bfs = sphere_counts_bfs(params, n).map_err(compute)?;
    let grammar = sphere_counts_grammar(params, n);
    let first_mismatch_index = [
        first_difference(&unified, &assembled)?,
        first_count_difference(&reference, &bfs.counts),
        first_count_difference(&reference, &grammar.counts),
    ]
    .into_iter()
    .flatten()
    .min();
    Ok(VerificationRecord {
        p: params.p(),
        q: params.q(),
        terms_checked: n + 1,
        routes_compared: vec![
            "unified formula".to_string(),
            route.to_string(),
            "bfs oracle".to_string(),
            "grammar oracle".to_string(),
        ],
        status: if first_mismatch_index.is_none() {
            Status::Ok
        } else {
            Status::Mismatch
        },
        first_mismatch_index,
    })
}

pub fn general(orders: &[u32], n: usize) -> Result<GeneralReport, CliError> {
    let formula = growth_generalized_odd(orders).map_err(usage)?;
    let series = series_expand(&formula, n).map_err(compute)?;
    Ok(GeneralReport {
        orders: orders.to_vec(),
        terms: n,
        formula,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_growth::Polynomial;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64s(num), Polynomial::from_i64s(den)).unwrap()
    }

    #[test]
    fn difference_index() {
        let a = rf(&[1, 1], &[1, -1]);
        assert_eq!(first_difference(&a, &a.clone()).unwrap(), None);
        // 1/(1-t) and 1/(1-t-t^5) agree below t^5
        let b = rf(&[1], &[1, -1]);
        let c = rf(&[1], &[1, -1, 0, 0, 0, -1]);
        assert_eq!(first_difference(&b, &c).unwrap(), Some(5));
        assert_eq!(first_difference(&a, &b).unwrap(), Some(1));
    }

    #[test]
    fn count_difference_index() {
        let reference = SeriesPrefix::new([1, 6, 12].map(BigInt::from).to_vec());
        assert_eq!(first_count_difference(&reference, &[1, 6, 12]), None);
        assert_eq!(first_count_difference(&reference, &[1, 6, 13]), Some(2));
    }

    #[test]
    fn verify_record_invariant() {
        for (p, q) in [(2, 2), (3, 4), (5, 5)] {
            let r = verify(TorusParams::new(p, q).unwrap(), 6).unwrap();
            assert_eq!(r.status == Status::Ok, r.first_mismatch_index.is_none());
            assert_eq!(r.routes_compared.len(), 4);
        }
    }
}
