//! Standard corings: trivial, Sweedler, comatrix, entwining, and coalgebras
//! over the field, plus the twisted convolution algebra of an entwining.

use crate::algmod::{Algebra, AlgebraMap, Bimodule, Coordinates};
use crate::coring::{dual_ring, Coring, DualRing};
use crate::error::{Axiom, Error, Result};
use crate::exactla::Mat;
use crate::field::{Field, Scalar};
use crate::tensorcat::{left_action_on_first, right_action_on_last, Junction, TensorSpace};

/// `A` as an `A`-coring with `Δ(a) = 1 ⊗ a` and `ε = id`.
pub fn trivial_coring(a: &Algebra) -> Coring {
    let delta = a.unit().kron(&a.identity());
    Coring::new(Bimodule::regular(a), delta, a.identity()).expect("trivial coring")
}

/// Right and left `B`-actions on `A` through `ι`.
pub fn restricted_actions(iota: &AlgebraMap) -> (Mat, Mat) {
    let a = &iota.target;
    let ract = a.mult() * &a.identity().kron(&iota.matrix);
    let lact = a.mult() * &iota.matrix.kron(&a.identity());
    (ract, lact)
}

/// `A ⊗_B A` for `ι: B → A`.
pub fn sweedler_space(iota: &AlgebraMap) -> Result<TensorSpace> {
    let a = &iota.target;
    let (ract, lact) = restricted_actions(iota);
    TensorSpace::new(a.field(), &[a.dim(), a.dim()], &[Some(Junction::new(iota.source.dim(), &ract, &lact))])
}

/// `A ⊗_B A` with `Δ(a ⊗ a') = (a ⊗ 1) ⊗ (1 ⊗ a')` and `ε(a ⊗ a') = aa'`.
pub fn sweedler_coring(iota: &AlgebraMap) -> Result<Coring> {
    crate::algmod::check_algebra_map(iota)?;
    let a = &iota.target;
    let n = a.dim();
    let space = sweedler_space(iota)?;
    let lact = left_action_on_first(&space, a.mult(), n);
    let ract = right_action_on_last(&space, a.mult(), n);
    let bimod = Bimodule::new(a.clone(), a.clone(), space.dim(), lact, ract)?;

    let id = a.identity();
    let ones = a.unit().kron(a.unit());
    let insert = id.kron(&ones).kron(&id);
    let p = space.projection();
    let delta = &(&p.kron(p) * &insert) * &space.section();
    let eps = space
        .quotient()
        .descends(a.mult())?
        .ok_or(Error::NotWellDefined {
            context: "multiplication on A ⊗_B A",
        })?;
    Coring::new(bimod, delta, eps)
}

/// A coalgebra over the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coalgebra {
    pub field: Field,
    pub dim: usize,
    pub delta: Mat,
    pub eps: Mat,
}

impl Coalgebra {
    pub fn new(delta: Mat, eps: Mat) -> Result<Coalgebra> {
        let field = delta.field();
        let dim = delta.cols();
        if delta.rows() != dim * dim || eps.shape() != (1, dim) {
            return Err(Error::DimensionMismatch {
                context: "coalgebra",
                expected: dim * dim,
                found: delta.rows(),
            });
        }
        let c = Coalgebra { field, dim, delta, eps };
        c.to_coring_checked()?;
        Ok(c)
    }

    fn to_coring_checked(&self) -> Result<Coring> {
        let k = Algebra::ground(self.field);
        let id = Mat::identity(self.field, self.dim);
        let bimod = Bimodule::new(k.clone(), k, self.dim, id.clone(), id)?;
        Coring::new(bimod, self.delta.clone(), self.eps.clone())
    }

    /// The coalgebra as a coring over the ground field.
    pub fn to_coring(&self) -> Coring {
        self.to_coring_checked().expect("validated coalgebra")
    }
}

/// Group-like basis `g₀, …, g_{n−1}` with `Δ(g) = g ⊗ g`, `ε(g) = 1`.
pub fn group_coalgebra(field: Field, n: usize) -> Coalgebra {
    let delta = Mat::from_fn(field, n * n, n, |r, c| if r == c * n + c { field.one() } else { field.zero() });
    let eps = Mat::from_fn(field, 1, n, |_, _| field.one());
    Coalgebra::new(delta, eps).expect("group-like coalgebra")
}

/// Elements `e_i ∈ Σ` and right `A`-linear functionals `e*_i: Σ → A` with
/// `Σ_i e_i·e*_i(s) = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub elements: Vec<Mat>,
    pub functionals: Vec<Mat>,
}

/// Right `A`-linear functionals on a `(B, A)`-bimodule.
pub fn right_dual_basis(sigma: &Bimodule) -> Vec<Mat> {
    let a = &sigma.right;
    crate::algmod::hom_space(a.field(), a.dim(), sigma.dim, |phi| {
        &(phi * &sigma.ract) - &(a.mult() * &phi.kron(&a.identity()))
    })
}

/// Verifies the dual basis identity on every basis element of `Σ`.
pub fn check_dual_basis(sigma: &Bimodule, db: &DualBasis) -> Result<()> {
    let field = sigma.field();
    let s = sigma.dim;
    let a = &sigma.right;
    if db.elements.len() != db.functionals.len()
        || db.elements.iter().any(|e| e.shape() != (s, 1))
        || db.functionals.iter().any(|f| f.shape() != (a.dim(), s))
    {
        return Err(Error::DimensionMismatch {
            context: "dual basis",
            expected: s,
            found: db.elements.len(),
        });
    }
    for f in &db.functionals {
        if (f * &sigma.ract) != (a.mult() * &f.kron(&a.identity())) {
            return Err(Error::NotInSubspace {
                context: "dual basis functional (not right linear)",
            });
        }
    }
    for t in 0..s {
        let e_t = Mat::unit_column(field, s, t);
        let mut sum = Mat::zeros(field, s, 1);
        for (e, f) in db.elements.iter().zip(&db.functionals) {
            sum = &sum + &(&sigma.ract * &e.kron(&(f * &e_t)));
        }
        if sum != e_t {
            return Err(Error::DualBasisInvalid { witness: t });
        }
    }
    Ok(())
}

/// `Σ* ⊗_B Σ` for a `(B, A)`-bimodule `Σ` with a finite dual basis.
pub fn comatrix_coring(sigma: &Bimodule, db: &DualBasis) -> Result<Coring> {
    check_dual_basis(sigma, db)?;
    let field = sigma.field();
    let (b, a) = (&sigma.left, &sigma.right);
    let (s, da, dbb) = (sigma.dim, a.dim(), b.dim());
    let star = right_dual_basis(sigma);
    let r = star.len();
    let coords = Coordinates::new(field, &star);
    let coord_col = |m: &Mat| -> Result<Vec<Scalar>> {
        coords.of(m).ok_or(Error::NotInSubspace {
            context: "dual module element",
        })
    };

    // (a·φ)(s) = aφ(s), (φ·b)(s) = φ(bs)
    let mut lact_star = Mat::zeros(field, r, da * r);
    for x in 0..da {
        for (j, phi) in star.iter().enumerate() {
            let v = coord_col(&(a.mult() * &Mat::unit_column(field, da, x).kron(phi)))?;
            for (i, y) in v.into_iter().enumerate() {
                lact_star.set(i, x * r + j, y);
            }
        }
    }
    let mut ract_star = Mat::zeros(field, r, r * dbb);
    for (j, phi) in star.iter().enumerate() {
        for y in 0..dbb {
            let v = coord_col(&(&(phi * &sigma.lact) * &Mat::unit_column(field, dbb, y).kron(&Mat::identity(field, s))))?;
            for (i, z) in v.into_iter().enumerate() {
                ract_star.set(i, j * dbb + y, z);
            }
        }
    }
    let space = TensorSpace::new(field, &[r, s], &[Some(Junction::new(dbb, &ract_star, &sigma.lact))])?;
    let lact = left_action_on_first(&space, &lact_star, da);
    let ract = right_action_on_last(&space, &sigma.ract, da);
    let bimod = Bimodule::new(a.clone(), a.clone(), space.dim(), lact, ract)?;

    let mut e = Mat::zeros(field, da, r * s);
    for (j, phi) in star.iter().enumerate() {
        for t in 0..s {
            for x in 0..da {
                e.set(x, j * s + t, phi.get(x, t).clone());
            }
        }
    }
    let eps = &e * &space.section();

    let dual_coords: Vec<Mat> = db
        .functionals
        .iter()
        .map(|f| coord_col(f).map(|v| Mat::column(field, v)))
        .collect::<Result<_>>()?;
    let q = space.dim();
    let p = space.projection();
    let mut t_amb = Mat::zeros(field, q * q, r * s);
    for j in 0..r {
        for t in 0..s {
            let mut col = Mat::zeros(field, q * q, 1);
            for (ei, fi) in db.elements.iter().zip(&dual_coords) {
                let left = p * &Mat::unit_column(field, r, j).kron(ei);
                let right = p * &fi.kron(&Mat::unit_column(field, s, t));
                col = &col + &left.kron(&right);
            }
            for row in 0..q * q {
                t_amb.set(row, j * s + t, col.get(row, 0).clone());
            }
        }
    }
    let delta = &t_amb * &space.section();
    Coring::new(bimod, delta, eps)
}

/// `(A, C, ψ)` with `ψ: C ⊗ A → A ⊗ C`. Valid exactly when
/// [`entwining_coring`] succeeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entwining {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    pub psi: Mat,
}

impl Entwining {
    /// `c ⊗ a ↦ a ⊗ c`.
    pub fn flip(alg: &Algebra, coalg: &Coalgebra) -> Entwining {
        let field = alg.field();
        let (da, nc) = (alg.dim(), coalg.dim);
        let psi = Mat::from_fn(field, da * nc, nc * da, |r, col| {
            let (c, a) = (col / da, col % da);
            if r == a * nc + c {
                field.one()
            } else {
                field.zero()
            }
        });
        Entwining {
            alg: alg.clone(),
            coalg: coalg.clone(),
            psi,
        }
    }
}

/// `A ⊗ C` with `a(a' ⊗ c)a'' = aa'ψ(c ⊗ a'')`, `Δ(a ⊗ c) = a ⊗ Δ(c)`,
/// `ε(a ⊗ c) = aε(c)`.
pub fn entwining_coring(e: &Entwining) -> Result<Coring> {
    let (a, c) = (&e.alg, &e.coalg);
    let field = a.field();
    let (da, nc) = (a.dim(), c.dim);
    if e.psi.shape() != (da * nc, nc * da) {
        return Err(Error::DimensionMismatch {
            context: "entwining map",
            expected: da * nc,
            found: e.psi.rows(),
        });
    }
    let id_a = a.identity();
    let id_c = Mat::identity(field, nc);
    let lact = a.mult().kron(&id_c);
    let ract = &lact * &id_a.kron(&e.psi);
    let bimod = Bimodule::new(a.clone(), a.clone(), da * nc, lact, ract)?;
    let insert = id_c.kron(a.unit()).kron(&id_c);
    let delta = id_a.kron(&(&insert * &c.delta));
    let eps = id_a.kron(&c.eps);
    Coring::new(bimod, delta, eps)
}

/// `Hom(C, A)` with `(f #_ψ g)(c) = Σ f(c₍₂₎)_α g(c₍₁₎^α)` and unit `ε_C·1_A`.
/// Basis: elementary matrices, row-major.
pub fn twisted_convolution(e: &Entwining) -> Result<Algebra> {
    entwining_coring(e)?;
    let (a, c) = (&e.alg, &e.coalg);
    let field = a.field();
    let (da, nc) = (a.dim(), c.dim);
    let basis: Vec<Mat> = (0..da * nc)
        .map(|i| {
            let mut m = Mat::zeros(field, da, nc);
            m.set(i / nc, i % nc, field.one());
            m
        })
        .collect();
    let unit = a.unit() * &c.eps;
    let id_a = a.identity();
    let id_c = Mat::identity(field, nc);
    Algebra::from_basis(field, &basis, &unit, |f, g| {
        &(&(&(a.mult() * &id_a.kron(g)) * &e.psi) * &id_c.kron(f)) * &c.delta
    })
}

/// The identification `f ↦ (a ⊗ c ↦ a f(c))` as a verified algebra
/// isomorphism from the twisted convolution algebra onto the dual ring.
pub fn twisted_to_dual(e: &Entwining) -> Result<(AlgebraMap, DualRing)> {
    let conv = twisted_convolution(e)?;
    let coring = entwining_coring(e)?;
    let dual = dual_ring(&coring)?;
    let (a, c) = (&e.alg, &e.coalg);
    let field = a.field();
    let (da, nc) = (a.dim(), c.dim);
    let mut cols = Vec::with_capacity(da * nc);
    for i in 0..da * nc {
        let mut f = Mat::zeros(field, da, nc);
        f.set(i / nc, i % nc, field.one());
        let big = a.mult() * &a.identity().kron(&f);
        cols.push(dual.coordinates(&big).ok_or(Error::NotInSubspace {
            context: "twisted convolution image",
        })?);
    }
    let m = Mat::from_rows(field, dual.dim(), cols).transpose();
    let iso = AlgebraMap::new(conv, dual.alg.clone(), m)?;
    if !iso.is_isomorphism() {
        return Err(Error::violation(Axiom::Multiplicative, vec![]));
    }
    Ok((iso, dual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::{endomorphism_algebra, enumerate_algebra_maps, opposite};
    use crate::coring::check_coring_morphism;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn trivial_coring_dimensions() {
        let f = f2();
        assert_eq!(trivial_coring(&Algebra::ground(f)).dim(), 1);
        assert_eq!(trivial_coring(&Algebra::diagonal(f, 2)).dim(), 2);
        assert_eq!(trivial_coring(&Algebra::matrix(f, 2)).dim(), 4);
    }

    #[test]
    fn sweedler_dimensions() {
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        assert_eq!(sweedler_coring(&AlgebraMap::identity(&d2)).unwrap().dim(), 2);
        assert_eq!(sweedler_coring(&AlgebraMap::unit_map(&d2)).unwrap().dim(), 4);
        let c2 = Algebra::cyclic_group(f, 2);
        assert_eq!(sweedler_coring(&AlgebraMap::unit_map(&c2)).unwrap().dim(), 4);
    }

    #[test]
    fn sweedler_of_identity_is_trivial_via_multiplication() {
        let f = f2();
        for a in [Algebra::diagonal(f, 2), Algebra::upper_triangular(f), Algebra::matrix(f, 2)] {
            let sw = sweedler_coring(&AlgebraMap::identity(&a)).unwrap();
            let triv = trivial_coring(&a);
            let gamma = sw.eps.clone();
            check_coring_morphism(&gamma, &sw, &triv).unwrap();
            assert!(gamma.inverse().is_some());
        }
    }

    #[test]
    fn group_coalgebras() {
        let f = f2();
        let g1 = group_coalgebra(f, 1);
        assert_eq!(g1.delta, Mat::identity(f, 1));
        let g3 = group_coalgebra(f, 3).to_coring();
        let dual = dual_ring(&g3).unwrap();
        let diag = Algebra::diagonal(f, 3);
        assert!(enumerate_algebra_maps(&dual.alg, &diag)
            .unwrap()
            .iter()
            .any(AlgebraMap::is_isomorphism));
    }

    fn standard_dual_basis(a: &Algebra) -> (Bimodule, DualBasis) {
        let k = Algebra::ground(a.field());
        let sigma = Bimodule::new(k, a.clone(), a.dim(), a.identity(), a.mult().clone()).unwrap();
        let db = DualBasis {
            elements: vec![a.unit().clone()],
            functionals: vec![a.identity()],
        };
        (sigma, db)
    }

    #[test]
    fn comatrix_on_a_recovers_sweedler() {
        let f = f2();
        let a = Algebra::diagonal(f, 2);
        let (sigma, db) = standard_dual_basis(&a);
        let cm = comatrix_coring(&sigma, &db).unwrap();
        let sw = sweedler_coring(&AlgebraMap::unit_map(&a)).unwrap();
        assert_eq!(cm.dim(), 4);
        // φ ⊗ s ↦ φ(1) ⊗ s, read on the basis
        let star = right_dual_basis(&sigma);
        let space = TensorSpace::new(f, &[star.len(), 2], &[None]).unwrap();
        let mut gamma = Mat::zeros(f, 4, 4);
        for (j, phi) in star.iter().enumerate() {
            let at_one = phi * a.unit();
            for t in 0..2 {
                let img = at_one.kron(&Mat::unit_column(f, 2, t));
                for r in 0..4 {
                    gamma.set(r, j * 2 + t, img.get(r, 0).clone());
                }
            }
        }
        let gamma = &gamma * &space.section();
        check_coring_morphism(&gamma, &cm, &sw).unwrap();
        assert!(gamma.inverse().is_some());
    }

    #[test]
    fn comatrix_dual_ring_is_opposite_endomorphisms() {
        let f = f2();
        let a = Algebra::diagonal(f, 2);
        let (sigma, db) = standard_dual_basis(&a);
        let cm = comatrix_coring(&sigma, &db).unwrap();
        let dual = dual_ring(&cm).unwrap();
        let (end, _) = endomorphism_algebra(&sigma.left, sigma.dim, &sigma.lact).unwrap();
        let target = opposite(&end);
        assert!(enumerate_algebra_maps(&dual.alg, &target)
            .unwrap()
            .iter()
            .any(AlgebraMap::is_isomorphism));
    }

    #[test]
    fn broken_dual_basis_is_rejected() {
        let a = Algebra::diagonal(f2(), 2);
        let (sigma, mut db) = standard_dual_basis(&a);
        db.functionals[0] = Mat::zeros(a.field(), 2, 2);
        assert_eq!(comatrix_coring(&sigma, &db).unwrap_err(), Error::DualBasisInvalid { witness: 0 });
    }

    #[test]
    fn flip_entwining() {
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        let gc2 = group_coalgebra(f, 2);
        let e = Entwining::flip(&d2, &gc2);
        assert_eq!(entwining_coring(&e).unwrap().dim(), 4);
        let zero = Entwining {
            psi: Mat::zeros(f, 4, 4),
            ..e.clone()
        };
        assert!(matches!(entwining_coring(&zero), Err(Error::AxiomViolation { .. })));
        twisted_to_dual(&e).unwrap();
    }

    #[test]
    fn flip_over_the_field_is_the_coalgebra() {
        let f = f2();
        let k = Algebra::ground(f);
        let gc2 = group_coalgebra(f, 2);
        let c = entwining_coring(&Entwining::flip(&k, &gc2)).unwrap();
        assert_eq!(c, gc2.to_coring());
    }

    #[test]
    fn twisted_convolution_of_group_likes_is_pointwise() {
        let f = Field::prime(3).unwrap();
        let k = Algebra::ground(f);
        let conv = twisted_convolution(&Entwining::flip(&k, &group_coalgebra(f, 2))).unwrap();
        assert_eq!(conv, Algebra::diagonal(f, 2));
    }

    #[test]
    fn twisted_convolution_over_trivial_coalgebra() {
        let f = f2();
        let a = Algebra::upper_triangular(f);
        let conv = twisted_convolution(&Entwining::flip(&a, &group_coalgebra(f, 1))).unwrap();
        assert_eq!(conv, a);
    }
}
