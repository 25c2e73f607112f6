//! Structured run reports. One run produces one ordered key-value document;
//! the `kv` format prints it verbatim and the `text` format adds a title and
//! indentation. Output is deterministic byte for byte; wall-clock timing only
//! ever goes to stderr behind `--timing`.

use nmi_core::{format_rational, NormalityReport, NormalityRoute, NormalityWitness, QVector};

use crate::formats::format_monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Kv,
}

pub struct Report {
    title: String,
    pairs: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            pairs: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.pairs.push((key.into(), value.to_string()));
    }

    pub fn push_vector(&mut self, key: impl Into<String>, v: &QVector) {
        self.push(key, v.to_string());
    }

    pub fn push_normality(&mut self, prefix: &str, report: &NormalityReport) {
        self.push(format!("{prefix}.normal"), report.normal);
        self.push(format!("{prefix}.route"), route_name(report.route));
        match &report.witness {
            None => {}
            Some(NormalityWitness::Power {
                exponent,
                power,
                lp_value,
                scaling_power,
            }) => {
                self.push(
                    format!("{prefix}.witness.monomial"),
                    format_monomial(exponent),
                );
                self.push(format!("{prefix}.witness.power"), power);
                self.push(
                    format!("{prefix}.witness.lp_value"),
                    format_rational(lp_value),
                );
                if let Some(p) = scaling_power {
                    self.push(format!("{prefix}.witness.scaling_power"), p);
                }
            }
            Some(NormalityWitness::Cone { point }) => {
                self.push(
                    format!("{prefix}.witness.cone_point"),
                    format_int_vec(point),
                );
            }
            Some(NormalityWitness::HochsterPair { cycle1, cycle2 }) => {
                self.push(format!("{prefix}.witness.cycle1"), format_cycle(cycle1));
                self.push(format!("{prefix}.witness.cycle2"), format_cycle(cycle2));
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Kv => {
                let mut out = String::new();
                for (k, v) in &self.pairs {
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(v);
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let mut out = format!("{}\n", self.title);
                let width = self.pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.pairs {
                    out.push_str(&format!("  {k:width$}  {v}\n"));
                }
                out
            }
        }
    }
}

pub fn route_name(route: NormalityRoute) -> &'static str {
    match route {
        NormalityRoute::ReesCone => "rees",
        NormalityRoute::DegreeTwoCone => "bset",
        NormalityRoute::Hochster => "hochster",
        NormalityRoute::Convention => "convention",
        NormalityRoute::CoverReduction => "reduction",
    }
}

pub fn format_int_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// 1-based cycle rendering.
pub fn format_cycle(cycle: &[usize]) -> String {
    let parts: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
    parts.join("-")
}
