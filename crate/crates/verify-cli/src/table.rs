use functors::division::branching_filtration;
use functors::weyl::rad_and_schur;
use functors::{evaluate, FunctorExpr};
use partitions::Partition;
use serde::{Deserialize, Serialize};

use crate::config::ConfigError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// functor, k, dim for k = 0..=K
    Dims,
    /// functor, k, label, dim, mult, seed
    Constituents,
    /// partition, k, step, lowered, dim
    Branching,
    /// partition, k, weyl_dim, rad_dim, schur_dim
    Schur,
}

impl TableKind {
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            TableKind::Dims => &["functor", "k", "dim"],
            TableKind::Constituents => &["functor", "k", "label", "dim", "mult", "seed"],
            TableKind::Branching => &["partition", "k", "step", "lowered", "dim"],
            TableKind::Schur => &["partition", "k", "weyl_dim", "rad_dim", "schur_dim"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableParams {
    /// A functor literal, or a partition literal for `branching` and `schur`.
    pub literal: String,
    /// Single `k`, or the upper end of `0..=k` for `dims`.
    pub k: usize,
    pub max_degree: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: TableKind,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn parse_partition(text: &str) -> Result<Partition, ConfigError> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    t.parse().map_err(|e| ConfigError::Params(format!("bad partition literal {text:?}: {e}")))
}

fn parse_functor(text: &str) -> Result<FunctorExpr, ConfigError> {
    FunctorExpr::parse(text).map_err(|e| ConfigError::Params(e.to_string()))
}

fn compute(e: impl std::fmt::Display) -> ConfigError {
    ConfigError::Params(format!("computation failed: {e}"))
}

pub fn emit_table(kind: TableKind, p: &TableParams) -> Result<Table, ConfigError> {
    let mut rows = Vec::new();
    match kind {
        TableKind::Dims => {
            let e = parse_functor(&p.literal)?;
            for k in 0..=p.k {
                rows.push(vec![e.to_string(), k.to_string(), evaluate(&e, k).map_err(compute)?.dim().to_string()]);
            }
        }
        TableKind::Constituents => {
            let e = parse_functor(&p.literal)?;
            let d = p.max_degree.unwrap_or(p.k).min(p.k);
            let t = meataxe::constituents(&e, p.k, d, p.seed).map_err(compute)?;
            for f in t.factors {
                rows.push(vec![e.to_string(), p.k.to_string(), f.label.to_string(), f.dim.to_string(), f.mult.to_string(), p.seed.to_string()]);
            }
        }
        TableKind::Branching => {
            let lambda = parse_partition(&p.literal)?;
            let b = branching_filtration(&lambda, p.k).map_err(compute)?;
            for (step, dim) in b.quotient_dims().into_iter().enumerate() {
                let lowered = lambda.minus(step + 1).map_err(compute)?;
                let lowered = lowered.partition().map_or_else(|| "-".to_string(), |q| q.to_string());
                rows.push(vec![lambda.to_string(), p.k.to_string(), (step + 1).to_string(), lowered, dim.to_string()]);
            }
        }
        TableKind::Schur => {
            let lambda = parse_partition(&p.literal)?;
            let d = rad_and_schur(&lambda, p.k).map_err(compute)?;
            rows.push(vec![lambda.to_string(), p.k.to_string(), d.weyl.dim().to_string(), d.rad.dim().to_string(), d.schur_dim().to_string()]);
        }
    }
    Ok(Table { kind, columns: kind.columns().iter().map(|c| c.to_string()).collect(), rows })
}

impl Table {
    /// Header line, then one line per row.
    pub fn to_tsv(&self) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn from_tsv(kind: TableKind, text: &str) -> Result<Table, ConfigError> {
        let mut lines = text.lines();
        let columns: Vec<String> = lines.next().unwrap_or_default().split('\t').map(String::from).collect();
        if columns != kind.columns() {
            return Err(ConfigError::Params(format!("unexpected header {columns:?}")));
        }
        let rows: Vec<Vec<String>> = lines.map(|l| l.split('\t').map(String::from).collect()).collect();
        if rows.iter().any(|r| r.len() != columns.len()) {
            return Err(ConfigError::Params("ragged table".into()));
        }
        Ok(Table { kind, columns, rows })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Table, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Params(e.to_string()))
    }
}
