//! The m-profile `(m_{<=1}, ..., m_{<=n-1})` that encodes a shifted graph.
//!
//! `m_k` counts edges whose smaller endpoint equals `k`; a shifted graph is
//! recovered from its profile by giving vertex `i` the edges `{i, i+1}, ...,
//! {i, i+m_i}`. The increments of a legal profile strictly decrease while
//! positive and then stay at zero.

use serde::de::{Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ShiftError};
use crate::graph::Graph;

/// Cumulative edge-minimum counts of a shifted graph on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MProfile {
    n: usize,
    cum: Vec<usize>,
}

impl MProfile {
    /// Validates and wraps a cumulative vector of length `n - 1`.
    pub fn new(n: usize, cum: Vec<usize>) -> Result<MProfile> {
        if n < 1 {
            return Err(ShiftError::EmptyVertexSet);
        }
        if cum.len() != n - 1 {
            return Err(ShiftError::InvalidProfile(format!(
                "expected {} entries for n = {}, got {}",
                n - 1,
                n,
                cum.len()
            )));
        }
        let mut prev_increment = usize::MAX;
        let mut prev_cum = 0usize;
        for (idx, &value) in cum.iter().enumerate() {
            let k = idx + 1;
            if value < prev_cum {
                return Err(ShiftError::InvalidProfile(format!(
                    "m_<={k} = {value} decreases below m_<={} = {prev_cum}",
                    k - 1
                )));
            }
            let increment = value - prev_cum;
            if increment > n - k {
                return Err(ShiftError::InvalidProfile(format!(
                    "m_{k} = {increment} exceeds n - {k} = {}",
                    n - k
                )));
            }
            if increment > 0 && increment >= prev_increment {
                return Err(ShiftError::InvalidProfile(format!(
                    "positive increments must strictly decrease; m_{k} = {increment} after {prev_increment}"
                )));
            }
            if prev_increment == 0 && increment > 0 {
                return Err(ShiftError::InvalidProfile(format!(
                    "increments must stay zero once zero; m_{k} = {increment}"
                )));
            }
            prev_increment = increment;
            prev_cum = value;
        }
        Ok(MProfile { n, cum })
    }

    /// Profile of the edgeless graph on `[n]`.
    pub fn zero(n: usize) -> Result<MProfile> {
        MProfile::new(n, vec![0; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cumulative counts `m_{<=1}, ..., m_{<=n-1}`.
    pub fn cumulative(&self) -> &[usize] {
        &self.cum
    }

    /// Increments `m_1, ..., m_{n-1}`.
    pub fn increments(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cum.len());
        let mut prev = 0;
        for &c in &self.cum {
            out.push(c - prev);
            prev = c;
        }
        out
    }

    /// Total edge count of the encoded graph.
    pub fn total(&self) -> usize {
        self.cum.last().copied().unwrap_or(0)
    }

    /// The unique shifted graph with this profile: vertex `i` carries edges
    /// `{i, i+1}, ..., {i, i+m_i}`.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.total());
        for (idx, m_i) in self.increments().into_iter().enumerate() {
            let i = idx + 1;
            for j in (i + 1)..=(i + m_i) {
                edges.push((i, j));
            }
        }
        Graph::new(self.n, edges).expect("profile invariants keep endpoints in range")
    }
}

// Profiles travel as plain JSON arrays; `n` is recovered as length + 1.
impl Serialize for MProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.cum.len()))?;
        for value in &self.cum {
            seq.serialize_element(value)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MProfile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ProfileVisitor;
        impl<'de> Visitor<'de> for ProfileVisitor {
            type Value = MProfile;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an array of cumulative m-profile entries")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<MProfile, A::Error> {
                let mut cum = Vec::new();
                while let Some(value) = seq.next_element::<usize>()? {
                    cum.push(value);
                }
                MProfile::new(cum.len() + 1, cum).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(ProfileVisitor)
    }
}
