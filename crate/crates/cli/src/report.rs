use std::fmt::Write;

use serde::{Deserialize, Serialize, Serializer};
use torus_growth::spectral::round_significant;
use torus_growth::{PerronReport, RationalFunction, SeriesPrefix};

/// Text and CSV renderings; JSON comes from `Serialize`.
pub trait Render: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> String;
}

fn twelve_digits<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_f64(round_significant(*x))
}

fn fmt_float(x: f64) -> String {
    let x = round_significant(x);
    if x != 0.0 && !(1e-4..1e15).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub p: u32,
    pub q: u32,
    pub terms: usize,
    pub formula: RationalFunction,
    pub series: SeriesPrefix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bfs: Option<SeriesPrefix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grammar: Option<SeriesPrefix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

impl SeriesReport {
    fn oracles(&self) -> Vec<(&'static str, &SeriesPrefix)> {
        [("bfs", &self.bfs), ("grammar", &self.grammar)]
            .into_iter()
            .filter_map(|(name, o)| o.as_ref().map(|s| (name, s)))
            .collect()
    }
}

impl Render for SeriesReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "T'({}, {})", self.p, self.q).unwrap();
        writeln!(s, "A(t) = {}", self.formula).unwrap();
        let row = |name: &str, prefix: &SeriesPrefix| {
            let terms: Vec<String> = prefix.terms().iter().map(ToString::to_string).collect();
            format!("{name:<8} [{}]\n", terms.join(", "))
        };
        s.push_str(&row("formula", &self.series));
        for (name, prefix) in self.oracles() {
            s.push_str(&row(name, prefix));
        }
        if let Some(m) = self.matches {
            writeln!(s, "oracles {}", if m { "match" } else { "MISMATCH" }).unwrap();
        }
        s
    }

    fn csv(&self) -> String {
        let oracles = self.oracles();
        let mut s = String::from("n,a_n");
        for (name, _) in &oracles {
            write!(s, ",{name}").unwrap();
        }
        s.push('\n');
        for (n, a) in self.series.terms().iter().enumerate() {
            write!(s, "{n},{a}").unwrap();
            for (_, prefix) in &oracles {
                write!(s, ",{}", prefix.terms()[n]).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub p: u32,
    pub q: u32,
    #[serde(serialize_with = "twelve_digits")]
    pub r0: f64,
    #[serde(serialize_with = "twelve_digits")]
    pub omega: f64,
    pub lemma_gcd: u64,
}

impl Render for RateReport {
    fn text(&self) -> String {
        format!(
            "T'({}, {})\nr0 = {}\nomega = {}\nlemma_gcd = {}\n",
            self.p,
            self.q,
            fmt_float(self.r0),
            fmt_float(self.omega),
            self.lemma_gcd
        )
    }

    fn csv(&self) -> String {
        format!(
            "p,q,r0,omega,lemma_gcd\n{},{},{},{},{}\n",
            self.p,
            self.q,
            fmt_float(self.r0),
            fmt_float(self.omega),
            self.lemma_gcd
        )
    }
}

const PERRON_HEADER: &str = "p,q,r0,omega,lemma_gcd,dominance_margin,verdict";

fn perron_row(r: &PerronReport) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.p,
        r.q,
        fmt_float(r.r0),
        fmt_float(r.omega),
        r.lemma_gcd,
        fmt_float(r.dominance_margin),
        r.verdict
    )
}

impl Render for PerronReport {
    fn text(&self) -> String {
        format!(
            "T'({}, {})\nr0 = {}\nomega = {}\nlemma_gcd = {}\ndominance_margin = {}\nverdict = {}\n",
            self.p,
            self.q,
            fmt_float(self.r0),
            fmt_float(self.omega),
            self.lemma_gcd,
            fmt_float(self.dominance_margin),
            self.verdict
        )
    }

    fn csv(&self) -> String {
        format!("{PERRON_HEADER}\n{}\n", perron_row(self))
    }
}

impl Render for Vec<PerronReport> {
    fn text(&self) -> String {
        let mut s = format!(
            "{:>3} {:>3} {:>15} {:>9} {:>16}  verdict\n",
            "p", "q", "omega", "lemma_gcd", "margin"
        );
        for r in self {
            writeln!(
                s,
                "{:>3} {:>3} {:>15} {:>9} {:>16}  {}",
                r.p,
                r.q,
                fmt_float(r.omega),
                r.lemma_gcd,
                fmt_float(r.dominance_margin),
                r.verdict
            )
            .unwrap();
        }
        s
    }

    fn csv(&self) -> String {
        let mut s = format!("{PERRON_HEADER}\n");
        for r in self {
            s.push_str(&perron_row(r));
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

/// Outcome of cross-checking every route for one pair. `status` is `Ok`
/// exactly when `first_mismatch_index` is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub p: u32,
    pub q: u32,
    pub terms_checked: usize,
    pub routes_compared: Vec<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch_index: Option<usize>,
}

impl VerificationRecord {
    fn status_str(&self) -> &'static str {
        match self.status {
            Status::Ok => "OK",
            Status::Mismatch => "MISMATCH",
        }
    }

    fn mismatch_str(&self) -> String {
        self.first_mismatch_index
            .map_or_else(String::new, |i| i.to_string())
    }
}

impl Render for VerificationRecord {
    fn text(&self) -> String {
        let mut s = format!(
            "T'({}, {}): {} over {} terms\nroutes: {}\n",
            self.p,
            self.q,
            self.status_str(),
            self.terms_checked,
            self.routes_compared.join(", ")
        );
        if let Some(i) = self.first_mismatch_index {
            writeln!(s, "first mismatch at n = {i}").unwrap();
        }
        s
    }

    fn csv(&self) -> String {
        format!(
            "p,q,terms_checked,routes_compared,status,first_mismatch_index\n{},{},{},{},{},{}\n",
            self.p,
            self.q,
            self.terms_checked,
            self.routes_compared.join(";"),
            self.status_str(),
            self.mismatch_str()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralReport {
    pub orders: Vec<u32>,
    pub terms: usize,
    pub formula: RationalFunction,
    pub series: SeriesPrefix,
}

impl Render for GeneralReport {
    fn text(&self) -> String {
        let orders: Vec<String> = self.orders.iter().map(ToString::to_string).collect();
        let terms: Vec<String> = self
            .series
            .terms()
            .iter()
            .map(ToString::to_string)
            .collect();
        format!(
            "orders {}\nA(t) = {}\nseries [{}]\n",
            orders.join(","),
            self.formula,
            terms.join(", ")
        )
    }

    fn csv(&self) -> String {
        let mut s = String::from("n,a_n\n");
        for (n, a) in self.series.terms().iter().enumerate() {
            writeln!(s, "{n},{a}").unwrap();
        }
        s
    }
}
