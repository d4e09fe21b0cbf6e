use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A character written as a finite sum of irreducibles `Σ m_ν [ν]`, with
/// every multiplicity positive and every `ν` of the same weight.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    weight: usize,
    terms: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn new(weight: usize) -> Self {
        Decomposition {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The single irreducible `[p]`.
    pub fn irreducible(p: Partition) -> Self {
        let mut d = Decomposition::new(p.weight());
        d.terms.insert(p, 1);
        d
    }

    /// Adds `m` copies of `[p]`.
    ///
    /// # Panics
    /// If `p` has the wrong weight.
    pub fn add(&mut self, p: Partition, m: u64) -> Result<()> {
        assert_eq!(p.weight(), self.weight, "constituent {p} has the wrong weight");
        if m == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(p).or_insert(0);
        *slot = slot.checked_add(m).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Multiplicity of `[p]`, zero when absent.
    pub fn get(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.terms.contains_key(p)
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn constituents(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys().rev()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> Result<u64> {
        self.terms
            .values()
            .try_fold(0u64, |acc, &m| acc.checked_add(m))
            .ok_or(Error::Overflow)
    }

    /// Keeps the constituents satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> Decomposition {
        Decomposition {
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    /// Relabels every constituent; `f` must be injective and land in a
    /// single weight.
    pub fn map_constituents(&self, mut f: impl FnMut(&Partition) -> Partition) -> Result<Decomposition> {
        let mut out: Option<Decomposition> = None;
        for (p, &m) in &self.terms {
            let q = f(p);
            out.get_or_insert_with(|| Decomposition::new(q.weight())).add(q, m)?;
        }
        Ok(out.unwrap_or_else(|| Decomposition::new(0)))
    }

    /// Row-wise minimum over all constituents.
    pub fn base(&self) -> Result<Partition> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::EmptyDecomposition)?.clone();
        Ok(it.fold(first, |acc, p| acc.intersect(p)))
    }

    /// Row-wise maximum over all constituents.
    pub fn cover(&self) -> Result<Partition> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::EmptyDecomposition)?.clone();
        Ok(it.fold(first, |acc, p| acc.union(p)))
    }

    /// Largest Durfee size of a constituent; zero when empty.
    pub fn durfee(&self) -> usize {
        self.terms.keys().map(Partition::durfee).max().unwrap_or(0)
    }

    /// One `PARTITION<TAB>MULTIPLICITY` line per term, descending.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in self.iter() {
            writeln!(f, "{p}\t{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

struct Term<'a>(&'a Partition, u64);

impl Serialize for Term<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("partition", self.0)?;
        st.serialize_field("multiplicity", &self.1)?;
        st.end()
    }
}

/// Serialized as an array of `{partition, multiplicity}` objects, descending.
impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (p, m) in self.iter() {
            seq.serialize_element(&Term(p, m))?;
        }
        seq.end()
    }
}

/// Row-wise minimum over the constituents of `d`.
pub fn base_of(d: &Decomposition) -> Result<Partition> {
    d.base()
}

/// Row-wise maximum over the constituents of `d`.
pub fn cover_of(d: &Decomposition) -> Result<Partition> {
    d.cover()
}

/// Largest Durfee size among the constituents of `d`.
pub fn durfee_of(d: &Decomposition) -> usize {
    d.durfee()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pieri_pair() -> Decomposition {
        let mut d = Decomposition::new(2);
        d.add(p("2"), 1).unwrap();
        d.add(p("1,1"), 1).unwrap();
        d
    }

    #[test]
    fn base_cover_durfee() {
        let d = pieri_pair();
        assert_eq!(base_of(&d).unwrap(), p("1"));
        assert_eq!(cover_of(&d).unwrap(), p("2,1"));
        assert_eq!(durfee_of(&d), 1);
        let empty = Decomposition::new(3);
        assert_eq!(base_of(&empty), Err(Error::EmptyDecomposition));
        assert_eq!(cover_of(&empty), Err(Error::EmptyDecomposition));
        assert_eq!(durfee_of(&empty), 0);
    }

    #[test]
    fn text_and_json() {
        let d = pieri_pair();
        assert_eq!(d.to_text(), "2\t1\n1,1\t1\n");
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"[{"partition":[2],"multiplicity":1},{"partition":[1,1],"multiplicity":1}]"#
        );
    }

    #[test]
    fn overflow_is_reported() {
        let mut d = Decomposition::new(1);
        d.add(p("1"), u64::MAX).unwrap();
        assert_eq!(d.add(p("1"), 1), Err(Error::Overflow));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut d = Decomposition::new(1);
        d.add(p("1"), 0).unwrap();
        assert!(d.is_empty());
    }
}
