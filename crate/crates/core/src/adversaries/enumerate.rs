//! Exhaustive instance spaces.
//!
//! An [`InstanceSpace`] is indexable, so a range of indices can be handed to a
//! worker and the union of the ranges is the whole space in a fixed order.

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::rational::Rational;

/// All `|values|^n` sequences of length `n`, in lexicographic order of value
/// positions (the first job is the most significant digit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpace {
    n: usize,
    values: Vec<Rational>,
    len: u64,
}

impl InstanceSpace {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParam("instance length must be >= 1".into()));
        }
        if values.is_empty() {
            return Err(Error::InvalidParam("value set is empty".into()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_positive()) {
            return Err(Error::InvalidParam(format!(
                "value {} is not positive",
                values[pos]
            )));
        }
        let len = (values.len() as u64)
            .checked_pow(n as u32)
            .ok_or_else(|| Error::InvalidParam("instance space too large".into()))?;
        Ok(InstanceSpace { n, values, len })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn job_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, index: u64) -> Option<Instance> {
        if index >= self.len {
            return None;
        }
        let base = self.values.len() as u64;
        let mut digits = vec![0usize; self.n];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as usize;
            rest /= base;
        }
        let times = digits.into_iter().map(|d| self.values[d].clone()).collect();
        Some(Instance::new(times).expect("values validated positive"))
    }

    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = Instance> + '_ {
        (start..end.min(self.len)).filter_map(|i| self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = Instance> + '_ {
        self.range(0, self.len)
    }
}

pub fn enumerate_instances(n: usize, values: Vec<Rational>) -> Result<InstanceSpace> {
    InstanceSpace::new(n, values)
}

/// Concatenation of the spaces for lengths `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace {
    spaces: Vec<InstanceSpace>,
    len: u64,
}

impl GradedSpace {
    pub fn new(n_max: usize, values: Vec<Rational>) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidParam("n_max must be >= 1".into()));
        }
        let spaces = (1..=n_max)
            .map(|n| InstanceSpace::new(n, values.clone()))
            .collect::<Result<Vec<_>>>()?;
        let len = spaces
            .iter()
            .try_fold(0u64, |acc, s| acc.checked_add(s.len()))
            .ok_or_else(|| Error::InvalidParam("instance space too large".into()))?;
        Ok(GradedSpace { spaces, len })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, mut index: u64) -> Option<Instance> {
        for s in &self.spaces {
            if index < s.len() {
                return s.get(index);
            }
            index -= s.len();
        }
        None
    }

    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = Instance> + '_ {
        (start..end.min(self.len)).filter_map(|i| self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn lexicographic_order() {
        let s = enumerate_instances(2, ints(&[1, 2])).unwrap();
        let all: Vec<String> = s.iter().map(|i| i.to_string()).collect();
        assert_eq!(all, ["<1,1>", "<1,2>", "<2,1>", "<2,2>"]);
    }

    #[test]
    fn singleton_values() {
        let s = enumerate_instances(3, ints(&[1])).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), [Instance::from_integers([1, 1, 1]).unwrap()]);
    }

    #[test]
    fn graded_count() {
        let g = GradedSpace::new(7, ints(&[1, 2, 3])).unwrap();
        assert_eq!(g.len(), 3279);
        assert_eq!(g.get(0).unwrap().len(), 1);
        assert_eq!(g.get(3278).unwrap(), Instance::from_integers([3; 7]).unwrap());
        assert!(g.get(3279).is_none());
    }

    #[test]
    fn chunks_cover_space() {
        let g = GradedSpace::new(4, ints(&[1, 2, 3])).unwrap();
        let whole: Vec<_> = g.range(0, g.len()).collect();
        let mut pieces = Vec::new();
        for start in (0..g.len()).step_by(7) {
            pieces.extend(g.range(start, start + 7));
        }
        assert_eq!(whole, pieces);
    }

    #[test]
    fn invalid_inputs() {
        assert!(enumerate_instances(2, vec![]).is_err());
        assert!(enumerate_instances(0, ints(&[1])).is_err());
        assert!(enumerate_instances(2, ints(&[1, 0])).is_err());
        assert!(GradedSpace::new(0, ints(&[1])).is_err());
    }
}
