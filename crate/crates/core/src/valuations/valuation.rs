use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::flow_algebra::{verify_flow, Flow};
use crate::graph_core::{Multigraph, VertexId, VertexSet};
use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// A vertex weighting `w` meant for nowhere-zero `k`-flows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    pub k: u32,
    pub values: Vec<Rational>,
}

impl Valuation {
    pub fn new(k: u32, values: Vec<Rational>) -> Self {
        Valuation { k, values }
    }

    /// `-value` on `minus`, `+value` elsewhere.
    pub fn signed(k: u32, n: usize, minus: &VertexSet, value: Rational) -> Self {
        let values = (0..n).map(|v| if minus.contains(v) { -value } else { value }).collect();
        Valuation { k, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum_over(&self, x: &VertexSet) -> Rational {
        x.iter().map(|v| self.values[v]).sum()
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    /// `d+(v) = (deg(v) + (k-2) w(v) / k) / 2`, the out-degree any
    /// orientation realizing `w` must have. Fails at the first vertex where
    /// that is not an integer in `0..=deg(v)`.
    pub fn target_outdegrees(&self, g: &Multigraph) -> Result<Vec<usize>> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::InvalidArgument(
                "valuation size differs from vertex count".into(),
            ));
        }
        if self.k < 2 {
            return Err(Error::InvalidArgument("k must be at least 2".into()));
        }
        let k = self.k as i64;
        let mut out = Vec::with_capacity(self.values.len());
        for (v, &w) in self.values.iter().enumerate() {
            if k == 2 && !w.is_zero() {
                return Err(Error::NotJaegerForm { vertex: v });
            }
            let d = g.degree(v) as i64;
            let twice = Rational::from_integer(d) + w * Rational::new(k - 2, k);
            if !twice.is_integer() || twice.to_integer() % 2 != 0 {
                return Err(Error::NotJaegerForm { vertex: v });
            }
            let t = twice.to_integer() / 2;
            if t < 0 || t > d {
                return Err(Error::NotJaegerForm { vertex: v });
            }
            out.push(t as usize);
        }
        Ok(out)
    }

    /// Whether `|sum over x| <= |boundary(x)|`.
    pub fn satisfied_on(&self, g: &Multigraph, x: &VertexSet) -> bool {
        self.sum_over(x).abs() <= Rational::from_integer(g.boundary(x).len() as i64)
    }
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    vertex: VertexId,
    num: i64,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct RawValuation {
    k: u32,
    values: Vec<RawEntry>,
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawValuation {
            k: self.k,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(vertex, r)| RawEntry {
                    vertex,
                    num: *r.numer(),
                    den: *r.denom(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawValuation::deserialize(d)?;
        let mut values = vec![Rational::zero(); raw.values.len()];
        let mut seen = vec![false; raw.values.len()];
        for e in raw.values {
            if e.vertex >= values.len() || seen[e.vertex] {
                return Err(serde::de::Error::custom(format!("bad or repeated vertex {}", e.vertex)));
            }
            if e.den == 0 {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            seen[e.vertex] = true;
            values[e.vertex] = Rational::new(e.num, e.den);
        }
        Ok(Valuation { k: raw.k, values })
    }
}

/// Serde helper: a rational as `{"num": .., "den": ..}`.
pub(crate) mod ratio_json {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Raw {
        num: i64,
        den: i64,
    }

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        r.map(|r| Raw {
            num: *r.numer(),
            den: *r.denom(),
        })
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        let raw = Option::<Raw>::deserialize(d)?;
        match raw {
            Some(Raw { den: 0, .. }) => Err(serde::de::Error::custom("zero denominator")),
            Some(r) => Ok(Some(Rational::new(r.num, r.den))),
            None => Ok(None),
        }
    }
}

/// `w(v) = k/(k-2) * (2 d+(v) - d(v))` for a nowhere-zero `k`-flow. For
/// `k = 2` every vertex has `2 d+ = d` and `w` is zero.
pub fn valuation_from_flow(g: &Multigraph, fl: &Flow, k: u32) -> Result<Valuation> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    let report = verify_flow(g, fl, k, true);
    if !report.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "not a nowhere-zero {k}-flow: {report:?}"
        )));
    }
    let out = fl.orientation().out_degrees(g);
    let values = (0..g.vertex_count())
        .map(|v| {
            let excess = 2 * out[v] as i64 - g.degree(v) as i64;
            if k == 2 {
                Rational::zero()
            } else {
                Rational::new(k as i64 * excess, k as i64 - 2)
            }
        })
        .collect();
    Ok(Valuation { k, values })
}
