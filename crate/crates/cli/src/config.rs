//! Logic-definition files: a versioned JSON format mirroring the kernel's
//! `Logic` invariants. Built-in logics can be exported to it and reloaded
//! without changing any engine result.

use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use mvlab::kernel::{Assoc, Connective, Fixity, Logic, TruthTable, TruthValue};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogicConfig {
    pub format_version: u32,
    pub name: String,
    /// Value names from {T, B, N, F}, in the logic's canonical order.
    pub values: Vec<String>,
    pub designated: Vec<String>,
    pub connectives: Vec<ConnectiveConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnectiveConfig {
    pub name: String,
    pub symbol: String,
    pub arity: u8,
    /// "prefix" or "infix".
    pub fixity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precedence: Option<u8>,
    /// "left" or "none"; defaults to "left" for infix connectives.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc: Option<String>,
    /// Unary: outputs in declared value order. Binary: rows (first
    /// argument) of outputs (second argument), both in declared value order.
    pub table: TableConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableConfig {
    Unary(Vec<String>),
    Binary(Vec<Vec<String>>),
}

fn value(name: &str) -> Result<TruthValue> {
    TruthValue::from_str(name).map_err(|e| anyhow!("{e}"))
}

fn values(names: &[String]) -> Result<Vec<TruthValue>> {
    names.iter().map(|n| value(n)).collect()
}

impl LogicConfig {
    pub fn to_logic(&self) -> Result<Logic> {
        if self.format_version != FORMAT_VERSION {
            bail!(
                "unsupported format_version {} (this build reads version {})",
                self.format_version,
                FORMAT_VERSION
            );
        }
        let vals = values(&self.values).context("in `values`")?;
        let designated = values(&self.designated).context("in `designated`")?;
        let mut connectives = Vec::new();
        for c in &self.connectives {
            connectives.push(c.to_connective(&vals).with_context(|| format!("connective `{}`", c.name))?);
        }
        Logic::new(&self.name, vals, designated, connectives).map_err(|e| anyhow!("{e}"))
    }

    pub fn from_logic(logic: &Logic) -> LogicConfig {
        LogicConfig {
            format_version: FORMAT_VERSION,
            name: logic.name().to_string(),
            values: logic.values().iter().map(|v| v.name().to_string()).collect(),
            designated: logic.designated().iter().map(|v| v.name().to_string()).collect(),
            connectives: logic
                .connectives()
                .iter()
                .map(|c| ConnectiveConfig::from_connective(c, logic.values()))
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<LogicConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading logic definition {}", path.display()))?;
        let config: LogicConfig = serde_json::from_str(&text)
            .with_context(|| format!("parsing logic definition {}", path.display()))?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

impl ConnectiveConfig {
    fn to_connective(&self, vals: &[TruthValue]) -> Result<Connective> {
        let table = match (&self.table, self.arity) {
            (TableConfig::Unary(outs), 1) => {
                if outs.len() != vals.len() {
                    bail!("unary table must list {} outputs", vals.len());
                }
                TruthTable::unary_over(vals, &values(outs)?)
            }
            (TableConfig::Binary(rows), 2) => {
                if rows.len() != vals.len() || rows.iter().any(|r| r.len() != vals.len()) {
                    bail!("binary table must be {n}x{n}", n = vals.len());
                }
                let rows: Vec<Vec<TruthValue>> =
                    rows.iter().map(|r| values(r)).collect::<Result<_>>()?;
                let refs: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
                TruthTable::binary_over(vals, &refs)
            }
            _ => bail!("table shape does not match arity {}", self.arity),
        };
        match (self.fixity.as_str(), self.arity) {
            ("prefix", 1) => Ok(Connective::unary(&self.name, &self.symbol, table)),
            ("infix", 2) => {
                let precedence = self
                    .precedence
                    .ok_or_else(|| anyhow!("infix connectives need a `precedence`"))?;
                let assoc = match self.assoc.as_deref().unwrap_or("left") {
                    "left" => Assoc::Left,
                    "none" => Assoc::None,
                    other => bail!("unknown assoc `{other}` (expected left or none)"),
                };
                Ok(Connective::binary(&self.name, &self.symbol, precedence, assoc, table))
            }
            (fixity, arity) => bail!("fixity `{fixity}` does not fit arity {arity}"),
        }
    }

    fn from_connective(c: &Connective, vals: &[TruthValue]) -> ConnectiveConfig {
        let table = match c.table() {
            TruthTable::Unary(_) => TableConfig::Unary(
                vals.iter()
                    .map(|v| c.table().get(&[*v]).expect("total").name().to_string())
                    .collect(),
            ),
            TruthTable::Binary(_) => TableConfig::Binary(
                vals.iter()
                    .map(|a| {
                        vals.iter()
                            .map(|b| c.table().get(&[*a, *b]).expect("total").name().to_string())
                            .collect()
                    })
                    .collect(),
            ),
        };
        let (fixity, precedence, assoc) = match c.fixity() {
            Fixity::Prefix => ("prefix".to_string(), None, None),
            Fixity::Infix { precedence, assoc } => (
                "infix".to_string(),
                Some(precedence),
                Some(match assoc {
                    Assoc::Left => "left".to_string(),
                    Assoc::None => "none".to_string(),
                }),
            ),
        };
        ConnectiveConfig {
            name: c.name().to_string(),
            symbol: c.symbol().to_string(),
            arity: c.arity() as u8,
            fixity,
            precedence,
            assoc,
            table,
        }
    }
}
