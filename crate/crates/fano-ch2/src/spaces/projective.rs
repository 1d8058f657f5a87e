//! Projective space and weighted projective space.

use super::{h_power_model, require_positive, SpaceSpec};
use crate::error::{Error, Result};
use crate::rational::{rat, Rat};
use crate::ring::{Construction, Provenance, Space};
use num::BigInt;

/// `P^n`: the ring `Q[h]/(h^(n+1))` with `deg(h^n) = 1`. Effective cones in
/// every dimension are generated by the powers of `h` (linear subspaces),
/// which is exact.
pub fn projective_space(n: usize) -> Result<Space> {
    if n < 1 {
        return Err(Error::Parameter(format!("P(n) needs n >= 1, got {n}")));
    }
    h_power_model(
        SpaceSpec::Projective(n as u32).to_string(),
        n,
        rat(1),
        Provenance::Exact,
        n,
        Construction::Projective { n },
        Vec::new(),
    )
}

/// Weighted projective space `P(a_0, ..., a_n)`, modeled through the smooth
/// stack it is the coarse space of: same ring shape as `P^n` but with
/// `deg(h^n) = 1/(a_0 ... a_n)`. The class `h` is ample.
pub fn weighted_projective(weights: &[i64]) -> Result<Space> {
    if weights.len() < 2 {
        return Err(Error::Parameter("WP needs at least two weights".to_string()));
    }
    require_positive(weights, "weights")?;
    let n = weights.len() - 1;
    let mut prod = BigInt::from(1);
    for w in weights {
        prod *= BigInt::from(*w);
    }
    let delta = Rat::new(BigInt::from(1), prod);
    h_power_model(
        SpaceSpec::Weighted(weights.to_vec()).to_string(),
        n,
        delta,
        Provenance::Exact,
        n,
        Construction::WeightedProjective { weights: weights.to_vec() },
        Vec::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn p3_basis_and_degree() {
        let p3 = projective_space(3).unwrap();
        assert_eq!(p3.dim(), 3);
        let labels: Vec<Vec<String>> = (0..=3).map(|k| p3.basis_labels(k)).collect();
        assert_eq!(labels[0], vec!["1"]);
        assert_eq!(labels[1], vec!["h"]);
        assert_eq!(labels[2], vec!["h^2"]);
        assert_eq!(labels[3], vec!["h^3"]);
        let top = p3.monomial(3, 0).unwrap();
        assert_eq!(p3.degree(&top).unwrap(), rat(1));
    }

    #[test]
    fn p2_surface_cone_is_the_point_ray() {
        let p2 = projective_space(2).unwrap();
        let cone = p2.cone(2).unwrap();
        assert_eq!(cone.generators.len(), 1);
        assert_eq!(cone.generators[0].label, "1");
    }

    #[test]
    fn p5_middle_pairing() {
        let p5 = projective_space(5).unwrap();
        let h2 = p5.monomial(2, 0).unwrap();
        let h3 = p5.monomial(3, 0).unwrap();
        assert_eq!(h2.pair(&h3).unwrap(), rat(1));
    }

    #[test]
    fn weighted_degrees() {
        for (ws, expect) in [
            (vec![1i64, 1, 2], ratio(1, 2)),
            (vec![1, 2, 3], ratio(1, 6)),
        ] {
            let wp = weighted_projective(&ws).unwrap();
            let top = wp.monomial(2, 0).unwrap();
            assert_eq!(wp.degree(&top).unwrap(), expect);
        }
    }

    #[test]
    fn unit_weights_match_projective_space() {
        let wp = weighted_projective(&[1, 1, 1]).unwrap();
        let p2 = projective_space(2).unwrap();
        assert_eq!(wp.dim(), p2.dim());
        for k in 0..=2 {
            assert_eq!(wp.basis_labels(k), p2.basis_labels(k));
        }
        let wt = wp.monomial(2, 0).unwrap();
        let pt = p2.monomial(2, 0).unwrap();
        assert_eq!(wp.degree(&wt).unwrap(), p2.degree(&pt).unwrap());
        for d in 0..=2 {
            let cw = wp.cone(d).unwrap();
            let cp = p2.cone(d).unwrap();
            assert_eq!(cw.provenance, cp.provenance);
            assert_eq!(cw.generators.len(), cp.generators.len());
            for (a, b) in cw.generators.iter().zip(cp.generators.iter()) {
                assert_eq!(a.label, b.label);
                assert_eq!(a.pairings, b.pairings);
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(projective_space(0).is_err());
        assert!(weighted_projective(&[1, 0, 2]).is_err());
        assert!(weighted_projective(&[3]).is_err());
    }
}
