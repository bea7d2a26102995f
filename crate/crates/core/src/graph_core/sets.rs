use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of small indices over a fixed universe `0..universe`, stored as a
/// bitset. Used both for vertex sets and edge sets; iteration is always in
/// increasing index order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexSet {
    universe: usize,
    words: Vec<u64>,
}

pub type VertexSet = IndexSet;
pub type EdgeSet = IndexSet;

impl IndexSet {
    pub fn new(universe: usize) -> Self {
        IndexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::new(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `universe` bits of a mask (`universe <= 64`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets hold at most 64 elements");
        let mut s = Self::new(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// The set as a `u64` mask, when the universe allows it.
    pub fn to_mask(&self) -> Option<u64> {
        (self.universe <= 64).then(|| self.words.first().copied().unwrap_or(0))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let (w, b) = (i / 64, i % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn complement(&self) -> Self {
        let mut c = Self::full(self.universe);
        for (cw, w) in c.words.iter_mut().zip(&self.words) {
            *cw &= !w;
        }
        c
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserializes from a plain index list; the universe is taken as
/// `max + 1` and can be widened with [`IndexSet::with_universe`].
impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        let universe = items.iter().max().map_or(0, |m| m + 1);
        Ok(IndexSet::from_indices(universe, items))
    }
}

impl IndexSet {
    pub fn with_universe(&self, universe: usize) -> Self {
        IndexSet::from_indices(universe, self.iter())
    }
}
