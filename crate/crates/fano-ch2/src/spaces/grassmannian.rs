//! Grassmannians, truncated to codimension two.
//!
//! `G(k, n)` parametrizes k-planes in an n-space. The model keeps
//! `N^1 = <s1>` and `N^2 = <s2, s11>` with the Pieri product
//! `s1 * s1 = s2 + s11`, and pairs `N^2` against the two 2-dimensional
//! Schubert cycles, whose pairing matrix is the identity in dual bases.

use super::SpaceSpec;
use crate::error::{Error, Result};
use crate::rational::rat;
use crate::ring::{
    ConeSpec, Construction, CycleGen, Provenance, RingImpl, Space, SpaceModel, TableRing,
};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Build `G(k, n)`. For `k = 1` or `k = n - 1` the Grassmannian is a
/// projective space and the model degenerates to it (with a note).
pub fn grassmannian(k: usize, n: usize) -> Result<Space> {
    if k < 1 || k + 1 > n {
        return Err(Error::Parameter(format!("G(k, n) needs 1 <= k <= n-1, got k={k}, n={n}")));
    }
    if k == 1 || k == n - 1 {
        let p = super::projective_space(n - 1)?;
        let mut model = (*p.0).clone();
        model
            .notes
            .push(format!("G({k}, {n}) is the projective space P({})", n - 1));
        let space = Space(Arc::new(model));
        return Ok(space);
    }

    let dim = k * (n - k);
    let basis = vec![
        vec!["1".to_string()],
        vec!["s1".to_string()],
        vec!["s2".to_string(), "s11".to_string()],
    ];
    let mut products = BTreeMap::new();
    // Pieri: s1 * s1 = s2 + s11 (both partitions fit in the k x (n-k) box)
    products.insert((1, 0, 1, 0), vec![rat(1), rat(1)]);

    let mut cones = BTreeMap::new();
    cones.insert(
        1,
        ConeSpec {
            cycle_dim: 1,
            generators: vec![CycleGen {
                label: "line".to_string(),
                pairings: vec![rat(1)],
                class: None,
            }],
            provenance: Provenance::Exact,
        },
    );
    cones.insert(
        2,
        ConeSpec {
            cycle_dim: 2,
            generators: vec![
                CycleGen {
                    label: "dual(s2)".to_string(),
                    pairings: vec![rat(1), rat(0)],
                    class: None,
                },
                CycleGen {
                    label: "dual(s11)".to_string(),
                    pairings: vec![rat(0), rat(1)],
                    class: None,
                },
            ],
            provenance: Provenance::Exact,
        },
    );

    let model = SpaceModel {
        name: SpaceSpec::Grassmannian(k as u32, n as u32).to_string(),
        dim,
        supported: 2,
        ring: RingImpl::Table(TableRing::new(basis, products)),
        degree: None,
        cones,
        nef_divisors: vec![("s1".to_string(), vec![rat(1)])],
        h_index: Some(0),
        chern_truncation: 2,
        construction: Construction::Grassmannian { k, n },
        notes: Vec::new(),
        pushforward_cn: None,
    };
    let space = Space(Arc::new(model));
    space.validate()?;
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g24_pieri_square() {
        let g = grassmannian(2, 4).unwrap();
        let s1 = g.monomial(1, 0).unwrap();
        let square = s1.mul(&s1).unwrap();
        assert_eq!(square.coords(), &[rat(1), rat(1)]);
    }

    #[test]
    fn g25_codim_two_basis() {
        let g = grassmannian(2, 5).unwrap();
        assert_eq!(g.basis_size(2), Some(2));
        assert_eq!(g.dim(), 6);
    }

    #[test]
    fn g36_schubert_duality_is_identity() {
        let g = grassmannian(3, 6).unwrap();
        let cone = g.cone(2).unwrap();
        let s2 = g.monomial(2, 0).unwrap();
        let s11 = g.monomial(2, 1).unwrap();
        let pairing = |c: &crate::ring::CycleClass, gen: &CycleGen| {
            crate::cones::cone_pairing(c, gen)
        };
        assert_eq!(pairing(&s2, &cone.generators[0]), rat(1));
        assert_eq!(pairing(&s2, &cone.generators[1]), rat(0));
        assert_eq!(pairing(&s11, &cone.generators[0]), rat(0));
        assert_eq!(pairing(&s11, &cone.generators[1]), rat(1));
    }

    #[test]
    fn degenerate_cases_are_projective_spaces() {
        let g = grassmannian(1, 3).unwrap();
        assert_eq!(g.dim(), 2);
        assert!(g.notes().iter().any(|n| n.contains("P(2)")));
        assert!(grassmannian(0, 3).is_err());
        assert!(grassmannian(3, 3).is_err());
    }

    #[test]
    fn codim_three_products_are_unsupported() {
        let g = grassmannian(2, 5).unwrap();
        let s1 = g.monomial(1, 0).unwrap();
        let s2 = g.monomial(2, 0).unwrap();
        assert!(matches!(
            s1.mul(&s2),
            Err(crate::error::Error::UnsupportedCodim { .. })
        ));
    }
}
