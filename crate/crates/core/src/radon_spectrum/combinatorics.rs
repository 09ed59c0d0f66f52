//! The index sets E_n of the Taylor-type expansion at the singular spectrum.

use serde::Serialize;

use crate::error::{Error, Result};

/// (j, k): a power j of the mixed invariants (a pair of powers on line 11) and a power k of |ζ|².
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ENIndex {
    pub j: Vec<u32>,
    pub k: u32,
}

impl ENIndex {
    pub fn total_j(&self) -> u32 {
        self.j.iter().sum()
    }
}

fn pairs(n: u32) -> Vec<(u32, u32)> {
    let m = n / 2;
    if n % 2 == 0 {
        let mut out: Vec<(u32, u32)> = (0..=m).map(|i| (2 * m + 1 - 2 * i, i)).collect();
        out.push((0, m + 1));
        out
    } else {
        (0..=m + 1).map(|i| (2 * m + 2 - 2 * i, i)).collect()
    }
}

pub fn e_n_set(n: u32, line: u8) -> Result<Vec<ENIndex>> {
    if !(1..=12).contains(&line) {
        return Err(Error::UnknownCase(format!("T1-L{line}")));
    }
    let base = pairs(n);
    if line != 11 {
        return Ok(base.into_iter().map(|(j, k)| ENIndex { j: vec![j], k }).collect());
    }
    Ok(base
        .into_iter()
        .flat_map(|(j, k)| (0..=j).rev().map(move |j1| ENIndex { j: vec![j1, j - j1], k }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat(v: Vec<ENIndex>) -> Vec<(u32, u32)> {
        v.into_iter().map(|e| (e.j[0], e.k)).collect()
    }

    #[test]
    fn small_sets() {
        assert_eq!(flat(e_n_set(2, 4).unwrap()), vec![(3, 0), (1, 1), (0, 2)]);
        assert_eq!(flat(e_n_set(1, 4).unwrap()), vec![(2, 0), (0, 1)]);
        assert_eq!(flat(e_n_set(0, 10).unwrap()), vec![(1, 0), (0, 1)]);
        let t: Vec<(Vec<u32>, u32)> = e_n_set(1, 11).unwrap().into_iter().map(|e| (e.j, e.k)).collect();
        assert_eq!(t, vec![(vec![2, 0], 0), (vec![1, 1], 0), (vec![0, 2], 0), (vec![0, 0], 1)]);
        assert!(e_n_set(1, 13).is_err());
    }
}
