use std::collections::HashSet;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CanonicalElement, TorusGroup};
use crate::error::{Error, Result};
use crate::formulas::TorusParams;

/// Default cap on the number of elements held across the three live layers.
pub const DEFAULT_ELEMENT_LIMIT: usize = 50_000_000;

/// Sphere sizes `a_0 .. a_N` of a group with respect to a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereCounts {
    pub p: u32,
    pub q: u32,
    pub counts: Vec<u64>,
}

impl SphereCounts {
    pub fn order(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.counts.iter().copied().map(BigInt::from).collect()
    }

    /// First index where the two count sequences differ, comparing only the
    /// common prefix.
    pub fn first_mismatch(&self, other: &[BigInt]) -> Option<usize> {
        self.counts
            .iter()
            .zip(other)
            .position(|(a, b)| BigInt::from(*a) != *b)
    }
}

impl Serialize for SphereCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            p: u32,
            q: u32,
            counts: Vec<String>,
        }
        Wire {
            p: self.p,
            q: self.q,
            counts: self.counts.iter().map(u64::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SphereCounts {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            p: u32,
            q: u32,
            counts: Vec<String>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let counts = wire
            .counts
            .iter()
            .map(|s| s.parse::<u64>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            p: wire.p,
            q: wire.q,
            counts,
        })
    }
}

/// Breadth-first sphere sizes from the identity, right-multiplying by
/// `generators`. The generating set must be closed under inversion, so the
/// neighbours of layer `n` lie in layers `n - 1`, `n`, `n + 1` and only
/// three layers are kept. `project` maps each product before it is stored
/// (identity for the group itself, dropping the center for the quotient).
fn bfs_layers<F>(
    group: &TorusGroup,
    generators: &[CanonicalElement],
    n: usize,
    limit: usize,
    project: F,
) -> Result<Vec<u64>>
where
    F: Fn(CanonicalElement) -> CanonicalElement,
{
    let mut counts = vec![1u64];
    let mut previous: HashSet<CanonicalElement> = HashSet::new();
    let mut current: HashSet<CanonicalElement> = HashSet::from([group.identity()]);
    for _ in 0..n {
        let mut next = HashSet::new();
        for element in &current {
            for g in generators {
                let product = project(group.checked_multiply(element, g)?);
                if !previous.contains(&product) && !current.contains(&product) {
                    next.insert(product);
                }
            }
            if previous.len() + current.len() + next.len() > limit {
                return Err(Error::ResourceLimit { limit });
            }
        }
        counts.push(next.len() as u64);
        previous = std::mem::replace(&mut current, next);
    }
    Ok(counts)
}

/// Sphere sizes of an arbitrary [`TorusGroup`] on its standard generators.
pub fn sphere_counts_bfs_group(group: &TorusGroup, n: usize, limit: usize) -> Result<Vec<u64>> {
    if n as u128 > i64::MAX as u128 {
        return Err(Error::CentralOverflow);
    }
    bfs_layers(group, &group.generators(), n, limit, |e| e)
}

/// `a_0 .. a_N` for `T'_{p,q}` by breadth-first search on the Cayley graph
/// of `x^±1, y^±1, z^±1`, deduplicated on canonical form.
pub fn sphere_counts_bfs(params: TorusParams, n: usize) -> Result<SphereCounts> {
    sphere_counts_bfs_limited(params, n, DEFAULT_ELEMENT_LIMIT)
}

pub fn sphere_counts_bfs_limited(
    params: TorusParams,
    n: usize,
    limit: usize,
) -> Result<SphereCounts> {
    let group = TorusGroup::new(params);
    Ok(SphereCounts {
        p: params.p(),
        q: params.q(),
        counts: sphere_counts_bfs_group(&group, n, limit)?,
    })
}

/// Sphere sizes of `Z_p * Z_q`, the image of `T'_{p,q}` with `z` killed,
/// on the images `x^±1, y^±1`.
pub fn quotient_sphere_counts(params: TorusParams, n: usize) -> Result<SphereCounts> {
    let group = TorusGroup::new(params);
    let gens: Vec<_> = group
        .generators()
        .into_iter()
        .map(|g| g.without_center())
        .filter(|g| !g.is_identity())
        .collect();
    Ok(SphereCounts {
        p: params.p(),
        q: params.q(),
        counts: bfs_layers(&group, &gens, n, DEFAULT_ELEMENT_LIMIT, |e| {
            e.without_center()
        })?,
    })
}
