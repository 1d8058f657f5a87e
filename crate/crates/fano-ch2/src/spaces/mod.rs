//! Constructors for the catalog of modeled spaces.
//!
//! Each constructor produces an immutable [`Space`] with monomial basis,
//! rewrite rules, degree functional, declared effective-cone generators per
//! cycle dimension, and the construction tag the Chern-character dispatch
//! keys on. Every constructed model passes the ring module's randomized
//! rewrite self-test before it is returned.

mod blowup;
mod complete_intersection;
mod grassmannian;
mod pbundle;
mod product;
mod projective;

pub use blowup::blowup_linear;
pub use complete_intersection::{complete_intersection, complete_intersection_pn};
pub use grassmannian::grassmannian;
pub use pbundle::projective_bundle;
pub use product::{product, pullback_left, pullback_right};
pub use projective::{projective_space, weighted_projective};

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};
use crate::ring::{
    Construction, CycleGen, PolyRing, PowerRule, Provenance, RingImpl, Space, SpaceModel,
};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Construction tree for a catalog space, mirroring the textual grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceSpec {
    Projective(u32),
    Weighted(Vec<i64>),
    Grassmannian(u32, u32),
    CompleteIntersection(Box<SpaceSpec>, Vec<i64>),
    Product(Box<SpaceSpec>, Box<SpaceSpec>),
    ProjectiveBundle(Box<SpaceSpec>, Vec<i64>),
    BlowupLinear(u32, u32),
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn ints(xs: &[i64]) -> String {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        }
        match self {
            SpaceSpec::Projective(n) => write!(f, "P({n})"),
            SpaceSpec::Weighted(ws) => write!(f, "WP({})", ints(ws)),
            SpaceSpec::Grassmannian(k, n) => write!(f, "G({k}, {n})"),
            SpaceSpec::CompleteIntersection(base, ds) => write!(f, "CI({base}; {})", ints(ds)),
            SpaceSpec::Product(x, y) => write!(f, "Prod({x}, {y})"),
            SpaceSpec::ProjectiveBundle(base, ws) => {
                let twists =
                    ws.iter().map(|w| format!("O({w})")).collect::<Vec<_>>().join(", ");
                write!(f, "PB({base}; {twists})")
            }
            SpaceSpec::BlowupLinear(n, m) => write!(f, "Bl(P({n}); L({m}))"),
        }
    }
}

/// Build the model for a construction tree.
pub fn build(spec: &SpaceSpec) -> Result<Space> {
    match spec {
        SpaceSpec::Projective(n) => projective_space(*n as usize),
        SpaceSpec::Weighted(ws) => weighted_projective(ws),
        SpaceSpec::Grassmannian(k, n) => grassmannian(*k as usize, *n as usize),
        SpaceSpec::CompleteIntersection(base, ds) => complete_intersection(base, ds),
        SpaceSpec::Product(x, y) => {
            let left = build(x)?;
            let right = build(y)?;
            product(&left, &right)
        }
        SpaceSpec::ProjectiveBundle(base, ws) => {
            let base_space = build(base)?;
            projective_bundle(&base_space, ws)
        }
        SpaceSpec::BlowupLinear(n, m) => blowup_linear(*n as usize, *m as usize),
    }
}

/// Is this a Picard-rank-1 catalog member (valid base for a projective
/// bundle, valid ambient handle for the slope criteria)?
pub fn is_rank_one_base(space: &Space) -> bool {
    matches!(
        space.construction(),
        Construction::Projective { .. }
            | Construction::WeightedProjective { .. }
            | Construction::CompleteIntersection { .. }
    )
}

/// Shared builder for the `Q[h]/(h^(dim+1))` shaped models: projective
/// space, weighted projective space, complete intersections.
pub(crate) fn h_power_model(
    name: String,
    dim: usize,
    delta: Rat,
    provenance: Provenance,
    chern_truncation: usize,
    construction: Construction,
    notes: Vec<String>,
) -> Result<Space> {
    let ring = PolyRing::new(vec!["h".to_string()], vec![PowerRule::nilpotent(dim as u32 + 1)]);
    let mut cones = BTreeMap::new();
    for d in 0..=dim {
        let rep_codim = dim - d;
        let label = ring.label(&vec![rep_codim as u32]);
        cones.insert(
            d,
            crate::ring::ConeSpec {
                cycle_dim: d,
                generators: vec![CycleGen {
                    label,
                    pairings: vec![delta.clone()],
                    class: Some((rep_codim, vec![rat(1)])),
                }],
                provenance,
            },
        );
    }
    let model = SpaceModel {
        name,
        dim,
        supported: dim,
        ring: RingImpl::Poly(ring),
        degree: Some(vec![delta]),
        cones,
        nef_divisors: vec![("h".to_string(), vec![rat(1)])],
        h_index: Some(0),
        chern_truncation,
        construction,
        notes,
        pushforward_cn: None,
    };
    let space = Space(Arc::new(model));
    space.validate()?;
    Ok(space)
}

/// Positive-integer check used by several constructors.
pub(crate) fn require_positive(values: &[i64], what: &str) -> Result<()> {
    if let Some(bad) = values.iter().find(|&&v| v < 1) {
        return Err(Error::Parameter(format!("{what} must be >= 1, got {bad}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        let spec = SpaceSpec::ProjectiveBundle(
            Box::new(SpaceSpec::CompleteIntersection(
                Box::new(SpaceSpec::Projective(4)),
                vec![2],
            )),
            vec![-2, 0],
        );
        assert_eq!(spec.to_string(), "PB(CI(P(4); 2); O(-2), O(0))");
        assert_eq!(SpaceSpec::BlowupLinear(3, 0).to_string(), "Bl(P(3); L(0))");
        assert_eq!(SpaceSpec::Weighted(vec![1, 1, 2]).to_string(), "WP(1, 1, 2)");
    }

    #[test]
    fn build_dispatches_whole_grammar() {
        let specs = [
            "P(3)",
            "WP(1, 1, 2)",
            "G(2, 5)",
            "CI(P(4); 2)",
            "Prod(P(2), P(1))",
            "PB(P(2); O(-2), O(0))",
            "Bl(P(3); L(0))",
        ];
        for s in specs {
            let spec = crate::cli::parser::parse_spec(s).unwrap();
            let space = build(&spec).unwrap();
            assert_eq!(space.name(), s);
        }
    }
}
