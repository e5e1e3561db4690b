use std::io::Write;
use std::time::Instant;

use apostol_kit::{
    batch_numbers, batch_polynomials, polynomial, run_grid_with, Family, GridSpec, PadeData, PolySpec, RunOptions,
    Scalar, Suite, Summary,
};

use crate::args::{BenchArgs, FamilyArg, FamilyFilter, Format, GenArgs, PadeArgs, VerifyArgs};
use crate::latex;
use crate::record::OutputRecord;
use crate::{CliError, Outcome};

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Bernoulli => Family::Bernoulli,
            FamilyArg::Euler => Family::Euler,
            FamilyArg::Genocchi => Family::Genocchi,
        }
    }
}

fn scalar(input: &str) -> Result<Scalar, CliError> {
    Ok(input.trim().parse()?)
}

fn scalar_list(input: &str) -> Result<Vec<Scalar>, CliError> {
    input.split(',').map(scalar).collect()
}

pub fn gen(args: &GenArgs, out: &mut impl Write) -> Result<Outcome, CliError> {
    let family = Family::from(args.family);
    let lambda = scalar(&args.lambda)?;
    family.check_lambda(&lambda)?;
    let (lo, hi) = match (args.k, args.k_max) {
        (Some(k), _) => (k, k),
        (None, Some(k_max)) => (0, k_max),
        (None, None) => unreachable!("clap requires one of --k, --k-max"),
    };
    let records: Vec<OutputRecord> = if args.numbers {
        batch_numbers(family, args.alpha, &lambda, hi)?
            .into_iter()
            .enumerate()
            .skip(lo)
            .map(|(k, value)| OutputRecord::Number {
                family,
                alpha: args.alpha,
                lambda: lambda.clone(),
                k,
                value,
            })
            .collect()
    } else {
        batch_polynomials(family, args.alpha, &lambda, hi)?
            .into_iter()
            .enumerate()
            .skip(lo)
            .map(|(k, coeffs)| OutputRecord::Polynomial {
                family,
                alpha: args.alpha,
                lambda: lambda.clone(),
                k,
                coeffs,
            })
            .collect()
    };
    match args.format {
        Format::Json => {
            for r in &records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => write_csv(&records, out)?,
        Format::Latex => {
            let rows = records.iter().map(|r| match r {
                OutputRecord::Polynomial { k, coeffs, .. } => (*k, latex::poly(coeffs)),
                OutputRecord::Number { k, value, .. } => (*k, latex::scalar(value)),
                _ => unreachable!("gen emits polynomials or numbers"),
            });
            out.write_all(latex::table(family, args.alpha, &lambda, args.numbers, rows).as_bytes())?;
        }
    }
    Ok(Outcome::Success)
}

/// Long format: one row per coefficient (or per number), ascending degree.
fn write_csv(records: &[OutputRecord], out: &mut impl Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let numbers = matches!(records.first(), Some(OutputRecord::Number { .. }));
    if numbers {
        w.write_record(["family", "alpha", "lambda", "k", "value"])?;
    } else {
        w.write_record(["family", "alpha", "lambda", "k", "degree", "coeff"])?;
    }
    for r in records {
        match r {
            OutputRecord::Polynomial {
                family,
                alpha,
                lambda,
                k,
                coeffs,
            } => {
                for (d, c) in coeffs.coeffs().iter().enumerate() {
                    w.write_record([
                        family.to_string(),
                        alpha.to_string(),
                        lambda.to_string(),
                        k.to_string(),
                        d.to_string(),
                        c.to_string(),
                    ])?;
                }
            }
            OutputRecord::Number {
                family,
                alpha,
                lambda,
                k,
                value,
            } => {
                w.write_record([
                    family.to_string(),
                    alpha.to_string(),
                    lambda.to_string(),
                    k.to_string(),
                    value.to_string(),
                ])?;
            }
            _ => unreachable!("gen emits polynomials or numbers"),
        }
    }
    w.flush()?;
    Ok(())
}

pub fn pade(args: &PadeArgs, out: &mut impl Write) -> Result<Outcome, CliError> {
    let data = PadeData::build(args.n, args.m);
    writeln!(out, "{}", OutputRecord::pade(&data, args.gamma).to_json())?;
    Ok(Outcome::Success)
}

pub fn grid_from_args(args: &VerifyArgs) -> Result<GridSpec, CliError> {
    let families = match args.family {
        FamilyFilter::All => Family::ALL.to_vec(),
        FamilyFilter::Bernoulli => vec![Family::Bernoulli],
        FamilyFilter::Euler => vec![Family::Euler],
        FamilyFilter::Genocchi => vec![Family::Genocchi],
    };
    let mut grid = GridSpec {
        families,
        p_max: args.p_max,
        ..GridSpec::default()
    };
    if let Some(v) = args.alpha_max {
        grid.alpha_max = v;
    }
    if let Some(v) = args.n_max {
        grid.n_max = v;
    }
    if let Some(v) = args.m_max {
        grid.m_max = v;
    }
    if let Some(v) = args.s_max {
        grid.s_max = v;
    }
    if let Some(v) = &args.lambdas {
        grid.lambdas = scalar_list(v)?;
    }
    if let Some(v) = &args.shifts {
        grid.shifts = scalar_list(v)?;
    }
    if let Some(v) = &args.rhos {
        grid.rhos = scalar_list(v)?;
    }
    Ok(grid)
}

pub fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<Outcome, CliError> {
    let suites = Suite::select(&args.suite)?;
    let grid = grid_from_args(args)?;
    let options = RunOptions {
        inject_error: args.inject_error,
    };
    let entries = run_grid_with(&grid, &suites, &options)?;
    let summary = Summary::of(&entries);
    if args.summary {
        writeln!(out, "{}", summary_json(&summary))?;
    } else {
        for entry in entries {
            writeln!(out, "{}", OutputRecord::from(entry).to_json())?;
        }
    }
    Ok(if summary.fail == 0 {
        Outcome::Success
    } else {
        Outcome::Violation
    })
}

#[derive(serde::Serialize)]
struct SummaryLine {
    pass: usize,
    fail: usize,
    #[serde(skip_serializing_if = "is_zero")]
    skipped: usize,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

/// `{"pass":N,"fail":M}`, with `"skipped"` appended only when nonzero.
pub fn summary_json(summary: &Summary) -> String {
    let line = SummaryLine {
        pass: summary.pass,
        fail: summary.fail,
        skipped: summary.skipped,
    };
    serde_json::to_string(&line).expect("summary serializes")
}

pub fn bench(args: &BenchArgs, out: &mut impl Write) -> Result<Outcome, CliError> {
    let family = Family::from(args.family);
    let lambda = scalar(&args.lambda)?;
    family.check_lambda(&lambda)?;

    let start = Instant::now();
    let per_index = (0..=args.k_max)
        .map(|k| {
            polynomial(&PolySpec {
                family,
                k,
                alpha: args.alpha,
                lambda: lambda.clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let per_index_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let batch = batch_polynomials(family, args.alpha, &lambda, args.k_max)?;
    let batch_secs = start.elapsed().as_secs_f64();

    let identical = per_index == batch;
    let record = OutputRecord::Bench {
        family,
        alpha: args.alpha,
        lambda,
        k_max: args.k_max,
        per_index_secs,
        batch_secs,
        identical,
    };
    writeln!(out, "{}", record.to_json())?;
    Ok(if identical {
        Outcome::Success
    } else {
        Outcome::Violation
    })
}
