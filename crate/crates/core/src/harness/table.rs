//! Minimum of the bound function for small machine counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::{global_min_f, min_f_for_m, BoundPoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: usize,
    pub bound: BoundPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<TableRow>,
    pub global: BoundPoint,
    pub m38: BoundPoint,
}

fn row(m: usize) -> TableRow {
    TableRow { m, bound: min_f_for_m(m).expect("m >= 2") }
}

/// Rows for `m = 2..=6`, the global minimum, and `m = 38`.
pub fn table1_report() -> Table1Report {
    Table1Report { rows: (2..=6).map(row).collect(), global: global_min_f(), m38: row(38).bound }
}

impl fmt::Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {:>12}  {:>5}", "m", "min f", "t_bar")?;
        for r in &self.rows {
            writeln!(f, "{:>4}  {:>12.5}  {:>5}", r.m, r.bound.value, r.bound.t.unwrap_or(0))?;
        }
        writeln!(f, "{:>4}  {:>12.6}  {:>5}", 38, self.m38.value, self.m38.t.unwrap_or(0))?;
        write!(
            f,
            "global minimum {:.9} at x = m/t = {:.6}, p = {:.6}",
            self.global.value, self.global.x, self.global.p
        )
    }
}
