//! Jordan type tables for a CI-shaped T, computed from scratch.
//!
//! Ranks for CIJT rows come from an explicit realization with `Λ_2 = 0`,
//! measured as `rank(ℓ^{j−2i}: A_i → A_{j−i})` with `ℓ = x`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::{
    enumerate_cijt, enumerate_diagonal_partitions, hook_code_direct, iota, is_cijt,
    partition_to_branch_label,
};
use crate::error::{Error, Result};
use crate::hessians::active_hessian_indices;
use crate::partition::{is_symmetric_jdt, HilbertFunction, Partition};
use crate::poly::BivariatePoly;
use crate::realize::{construct_ci, LambdaSource};

/// Rank of one Hessian; `vanishing` marks ranks below full.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEntry {
    pub rank: usize,
    pub vanishing: bool,
}

impl fmt::Display for RankEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.rank, if self.vanishing { "*" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: Partition,
    pub hook_code: String,
    pub branch_label: String,
    pub subscripted_label: String,
    /// One entry per active Hessian order; absent for non-CIJT rows.
    pub ranks: Option<Vec<RankEntry>>,
    pub symmetric: bool,
    pub cijt: bool,
}

impl TableRow {
    pub fn rank_strings(&self, orders: usize) -> Vec<String> {
        match &self.ranks {
            Some(r) => r.iter().map(|e| e.to_string()).collect(),
            None => vec!["-".to_string(); orders],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanTable {
    pub id: String,
    pub hilbert: HilbertFunction,
    pub orders: Vec<usize>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IotaRow {
    pub partition: Partition,
    pub image: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IotaTable {
    pub id: String,
    pub hilbert: HilbertFunction,
    pub rows: Vec<IotaRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FigureTable {
    Jordan(JordanTable),
    Iota(IotaTable),
}

pub const FIGURE_IDS: [&str; 8] = [
    "2a-121", "2a-1221", "2a-12321", "3a:k", "9", "10.5:k", "11:k", "12:k",
];

pub fn table_row(p: &Partition, t: &HilbertFunction) -> Result<TableRow> {
    t.check_partition(p)?;
    let hook = hook_code_direct(p)?;
    let cijt = is_cijt(p)?;
    let ranks = if cijt {
        Some(realized_ranks(p, t)?)
    } else {
        None
    };
    Ok(TableRow {
        partition: p.clone(),
        hook_code: hook.traditional_string(),
        branch_label: partition_to_branch_label(p)?.to_string(),
        subscripted_label: hook.subscripted_string(),
        ranks,
        symmetric: is_symmetric_jdt(p, t)?,
        cijt,
    })
}

fn realized_ranks(p: &Partition, t: &HilbertFunction) -> Result<Vec<RankEntry>> {
    let r = construct_ci(p, &LambdaSource::Zero)?;
    let alg = crate::algebra::quotient(&r.ideal)?;
    let x = BivariatePoly::x();
    let j = t.j();
    active_hessian_indices(t)
        .into_iter()
        .map(|i| {
            let rank = alg.rank_mult_power(&x, i as u32, (j - i) as u32)?;
            Ok(RankEntry {
                rank,
                vanishing: rank < i + 1,
            })
        })
        .collect()
}

pub fn jordan_table(id: &str, t: &HilbertFunction, cijt_only: bool) -> Result<JordanTable> {
    let parts = if cijt_only {
        enumerate_cijt(t)?
    } else {
        enumerate_diagonal_partitions(t)?
    };
    let rows = parts
        .iter()
        .map(|p| table_row(p, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(JordanTable {
        id: id.to_string(),
        hilbert: t.clone(),
        orders: active_hessian_indices(t),
        rows,
    })
}

/// d-part CIJT partitions and their images under ι.
pub fn iota_table(id: &str, t: &HilbertFunction) -> Result<IotaTable> {
    let rows = enumerate_cijt(t)?
        .into_iter()
        .filter(|p| p.len() == t.d())
        .map(|p| {
            Ok(IotaRow {
                image: iota(&p)?,
                partition: p,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IotaTable {
        id: id.to_string(),
        hilbert: t.clone(),
        rows,
    })
}

fn parse_k(id: &str, rest: &str, min: usize) -> Result<usize> {
    match rest.parse::<usize>() {
        Ok(k) if k >= min => Ok(k),
        _ => Err(Error::Parse(format!(
            "table id {id}: k must be an integer ≥ {min}"
        ))),
    }
}

/// Builds the table for one of [`FIGURE_IDS`], with `k` substituted for the `:k` forms.
pub fn figure_table(id: &str) -> Result<FigureTable> {
    let id = id.trim();
    let jt = |t: HilbertFunction| jordan_table(id, &t, false).map(FigureTable::Jordan);
    match id {
        "2a-121" => return jt(HilbertFunction::from_dk(2, 1)?),
        "2a-1221" => return jt(HilbertFunction::from_dk(2, 2)?),
        "2a-12321" => return jt(HilbertFunction::from_dk(3, 1)?),
        "9" => return jt(HilbertFunction::from_dk(3, 2)?),
        _ => {}
    }
    if let Some((fig, rest)) = id.split_once(':') {
        match fig {
            "3a" => return jt(HilbertFunction::from_dk(2, parse_k(id, rest, 2)?)?),
            "10.5" | "11" | "12" => {
                let d = match fig {
                    "10.5" => 3,
                    "11" => 4,
                    _ => 5,
                };
                let t = HilbertFunction::from_dk(d, parse_k(id, rest, 1)?)?;
                return iota_table(id, &t).map(FigureTable::Iota);
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!(
        "unknown table id {id:?}; expected one of {}",
        FIGURE_IDS.join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let FigureTable::Jordan(t) = figure_table("2a-121").unwrap() else {
            panic!()
        };
        assert_eq!(t.rows.len(), 3);
        let r = &t.rows[1];
        assert_eq!(r.partition.to_string(), "2^2");
        assert_eq!(r.rank_strings(1), vec!["0*"]);
        assert_eq!(r.subscripted_label, "E,1_1,E");
        let FigureTable::Iota(t) = figure_table("11:1").unwrap() else {
            panic!()
        };
        assert!(t.rows.iter().all(|r| r.partition == r.image));
        assert!(figure_table("3a:1").is_err());
        assert!(figure_table("7").is_err());
    }
}
