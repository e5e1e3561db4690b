use apostol_kit::{Family, GridEntry, GridOutcome, PadeData, Poly, Rational, Scalar, Suite};
use serde::{Deserialize, Serialize};

/// One line of CLI output.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputRecord {
    Polynomial {
        family: Family,
        alpha: u32,
        lambda: Scalar,
        k: usize,
        coeffs: Poly,
    },
    Number {
        family: Family,
        alpha: u32,
        lambda: Scalar,
        k: usize,
        value: Scalar,
    },
    Pade {
        n: usize,
        m: usize,
        numer: Vec<Rational>,
        denom: Vec<Rational>,
        gamma: Vec<Rational>,
    },
    Report {
        suite: Suite,
        #[serde(flatten)]
        outcome: GridOutcome,
    },
    Bench {
        family: Family,
        alpha: u32,
        lambda: Scalar,
        k_max: usize,
        per_index_secs: f64,
        batch_secs: f64,
        identical: bool,
    },
}

impl OutputRecord {
    pub fn pade(data: &PadeData, gamma: Option<usize>) -> Self {
        let ints = |v: &[apostol_kit::BigInt]| v.iter().cloned().map(Rational::from).collect();
        OutputRecord::Pade {
            n: data.n,
            m: data.m,
            numer: ints(&data.numer),
            denom: ints(&data.denom),
            gamma: gamma.map(|l| data.remainder_coeffs(l)).unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

impl From<GridEntry> for OutputRecord {
    fn from(entry: GridEntry) -> Self {
        OutputRecord::Report {
            suite: entry.suite,
            outcome: entry.outcome,
        }
    }
}
