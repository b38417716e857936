//! Source subsets `A' ⊆ X`, stored canonically as sorted, de-duplicated ids.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::evidence::{EvidenceSet, Interval, SourceId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset has a single source; the weighted sum needs at least two")]
    SingletonSubset,
    #[error("source {0} is not part of the evidence set")]
    UnknownSource(SourceId),
    #[error("cannot parse subset {0:?}: expected labels like x1,x2 or x1+x2")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SourceSubset {
    members: Vec<SourceId>,
}

impl SourceSubset {
    pub fn new(ids: impl IntoIterator<Item = SourceId>) -> Self {
        let mut members: Vec<_> = ids.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SourceSubset { members }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `{x1, ..., xn}`.
    pub fn all(n: usize) -> Self {
        SourceSubset { members: (0..n).map(SourceId::from_index).collect() }
    }

    /// Bit `k` selects source `x(k+1)`.
    pub fn from_mask(mask: u64) -> Self {
        SourceSubset { members: (0..64).filter(|k| mask >> k & 1 == 1).map(SourceId::from_index).collect() }
    }

    /// Inverse of [`from_mask`](Self::from_mask); `None` if any id exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        self.members.iter().try_fold(0u64, |acc, id| {
            let k = id.index();
            (k < 64).then(|| acc | 1 << k)
        })
    }

    pub fn members(&self) -> &[SourceId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: SourceId) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn without(&self, id: SourceId) -> Self {
        SourceSubset { members: self.members.iter().copied().filter(|&m| m != id).collect() }
    }

    /// Looks up the member intervals in `ev`, in ascending id order.
    pub fn intervals(&self, ev: &EvidenceSet) -> Result<Vec<Interval>, SubsetError> {
        self.members.iter().map(|&id| ev.interval(id).copied().ok_or(SubsetError::UnknownSource(id))).collect()
    }
}

impl fmt::Display for SourceSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, id) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{id}")?;
        }
        Ok(())
    }
}

/// Accepts `x1,x2,x3`, `x1+x2` or bare numbers `1,2`.
impl FromStr for SourceSubset {
    type Err = SubsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ids = s
            .split([',', '+'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let digits = t.strip_prefix(['x', 'X', 's', 'S']).unwrap_or(t);
                match digits.parse::<u32>() {
                    Ok(v) if v > 0 => Ok(SourceId(v)),
                    _ => Err(SubsetError::Syntax(s.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SourceSubset::new(ids))
    }
}
