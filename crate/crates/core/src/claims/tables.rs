//! Recomputes the printed sequence tables from the matrix constructors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::registry::{column_blocks, family_blocks, product_blocks};
use super::{DetCache, Fault};
use crate::algebra::{Poly, RingValue};
use crate::matrix::{FamilyId, SubstitutionMode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: i64,
    pub computed: String,
    pub printed: String,
    pub differs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    /// The closed form printed in the table's last column.
    pub formula: String,
    pub cells: Vec<TableCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableBlock {
    pub name: String,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub table: u8,
    pub n_max: i64,
    pub blocks: Vec<TableBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("no table {0}; expected 1, 2 or 3")]
    UnknownTable(u8),
    #[error("n_max must be at least 3, got {0}")]
    RangeTooSmall(i64),
    #[error(transparent)]
    Fault(#[from] Fault),
}

fn cell(n: i64, computed: RingValue, printed: RingValue) -> TableCell {
    TableCell {
        n,
        differs: computed != printed,
        computed: computed.to_string(),
        printed: printed.to_string(),
    }
}

fn at(v: RingValue, t: Option<i64>) -> RingValue {
    match t {
        Some(t) => v.eval_at(&BigInt::from(t)),
        None => v,
    }
}

/// Rebuilds table `which` for `n = 1..=n_max`.
///
/// Each cell is the oracle determinant. `printed` is the literal table
/// entry for `n <= 3` and the row's closed form beyond that; `differs`
/// flags cells where the two disagree.
pub fn reproduce_table(which: u8, n_max: i64) -> Result<TableDoc, TableError> {
    if !(1..=3).contains(&which) {
        return Err(TableError::UnknownTable(which));
    }
    if n_max < 3 {
        return Err(TableError::RangeTooSmall(n_max));
    }
    let cache = DetCache::new();
    let blocks = match which {
        1 => table1(&cache, n_max)?,
        2 => table2(&cache, n_max)?,
        _ => table3(&cache, n_max)?,
    };
    Ok(TableDoc {
        table: which,
        n_max,
        blocks,
    })
}

fn table1(cache: &DetCache, n_max: i64) -> Result<Vec<TableBlock>, Fault> {
    let mut blocks = Vec::new();
    for block in family_blocks() {
        let subject = FamilyId::Family(block.family);
        let mut rows = Vec::new();
        for row in &block.rows {
            let mut cells = Vec::new();
            for n in 1..=n_max {
                let computed = at(cache.det(subject, n as usize)?, Some(row.t));
                let printed = if n <= 3 {
                    BigInt::from(row.printed[(n - 1) as usize])
                } else {
                    (row.value)(n)
                };
                cells.push(cell(n, computed, printed.into()));
            }
            rows.push(TableRow {
                label: format!("t={}", row.t),
                formula: row.label.to_string(),
                cells,
            });
        }
        let mut cells = Vec::new();
        for n in 1..=n_max {
            let computed = cache.det(subject, n as usize)?;
            let printed: Poly = if n <= 3 {
                block.symbolic[(n - 1) as usize]
                    .parse()
                    .expect("printed literal")
            } else {
                (block.general_fn)(n)
            };
            cells.push(cell(n, computed, printed.into()));
        }
        rows.push(TableRow {
            label: "t".into(),
            formula: block
                .general
                .split('=')
                .nth(1)
                .unwrap_or(block.general)
                .to_string(),
            cells,
        });
        blocks.push(TableBlock {
            name: format!("{}_n", block.family),
            rows,
        });
    }
    Ok(blocks)
}

fn table2(cache: &DetCache, n_max: i64) -> Result<Vec<TableBlock>, Fault> {
    let mut blocks = Vec::new();
    for block in column_blocks() {
        let modes: &[SubstitutionMode] = if block.family.name() == "E" {
            &[SubstitutionMode::AllOnes, SubstitutionMode::BasisColumn]
        } else {
            &[SubstitutionMode::AllOnes]
        };
        for &mode in modes {
            let mut rows = Vec::new();
            for (k, formula) in block.cells.iter().enumerate() {
                let i = k + 1;
                let id = FamilyId::Substituted {
                    family: block.family,
                    column: i,
                    mode,
                };
                let mut cells = Vec::new();
                for n in i as i64..=n_max {
                    let computed = cache.det(id, n as usize)?;
                    let printed = (block.formula_fn)(n, i as i64);
                    cells.push(cell(n, computed, printed.into()));
                }
                rows.push(TableRow {
                    label: format!("i={i}"),
                    formula: formula.to_string(),
                    cells,
                });
            }
            blocks.push(TableBlock {
                name: format!("{}^i_n [{}]", block.family, mode.name()),
                rows,
            });
        }
    }
    Ok(blocks)
}

fn table3(cache: &DetCache, n_max: i64) -> Result<Vec<TableBlock>, Fault> {
    let mut blocks = Vec::new();
    for block in product_blocks() {
        let subject = FamilyId::Product(block.pair);
        let mut rows = Vec::new();
        for (t, printed_cells) in block.rows {
            let mut cells = Vec::new();
            for n in 1..=n_max {
                let computed = at(cache.det(subject, n as usize)?, Some(t));
                let printed = if n <= 3 {
                    BigInt::from(printed_cells[(n - 1) as usize])
                } else {
                    block.term.poly(n).eval(&BigInt::from(t))
                };
                cells.push(cell(n, computed, printed.into()));
            }
            rows.push(TableRow {
                label: format!("t={t}"),
                formula: format!("{} at t={t}", block.term.text),
                cells,
            });
        }
        blocks.push(TableBlock {
            name: format!("|{}_n|", block.pair.name()),
            rows,
        });
    }
    Ok(blocks)
}

impl TableDoc {
    pub fn cell(&self, block: &str, row: &str, n: i64) -> Option<&TableCell> {
        self.blocks
            .iter()
            .find(|b| b.name == block)?
            .rows
            .iter()
            .find(|r| r.label == row)?
            .cells
            .iter()
            .find(|c| c.n == n)
    }

    pub fn flagged(&self) -> impl Iterator<Item = (&TableBlock, &TableRow, &TableCell)> {
        self.blocks.iter().flat_map(|b| {
            b.rows
                .iter()
                .flat_map(move |r| r.cells.iter().filter(|c| c.differs).map(move |c| (b, r, c)))
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serialises");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "table", "block", "row", "n", "computed", "printed", "differs",
        ])
        .expect("in-memory write");
        for b in &self.blocks {
            for r in &b.rows {
                for c in &r.cells {
                    w.write_record([
                        self.table.to_string(),
                        b.name.clone(),
                        r.label.clone(),
                        c.n.to_string(),
                        c.computed.clone(),
                        c.printed.clone(),
                        c.differs.to_string(),
                    ])
                    .expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// Plain-text rendering; a disagreeing cell shows as `computed*(printed)`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "table {} (n=1..{})", self.table, self.n_max);
        for b in &self.blocks {
            let _ = writeln!(out, "\n{}", b.name);
            for r in &b.rows {
                let cells: Vec<String> = r
                    .cells
                    .iter()
                    .map(|c| {
                        if c.differs {
                            format!("{}*({})", c.computed, c.printed)
                        } else {
                            c.computed.clone()
                        }
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  {:<5} {}  | {}",
                    r.label,
                    cells.join("  "),
                    r.formula
                );
            }
        }
        let flagged = self.flagged().count();
        let _ = writeln!(out, "\n{flagged} cell(s) differ from print");
        out
    }
}
