//! Corings, comodules, colinear maps, bicomodules and the left dual ring.
//!
//! A coproduct `C → C ⊗_A C` is stored as its canonical lift into `C ⊗ C`
//! over the field; coactions likewise. All identities are compared after
//! projecting to the relevant quotient.

use crate::algmod::{Algebra, Bimodule, Coordinates, LeftModule, RightModule};
use crate::error::{Axiom, Error, Result};
use crate::exactla::{unravel, Mat};
use crate::field::{Field, Scalar};
use crate::tensorcat::{right_action_on_last, Junction, TensorSpace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coring {
    pub alg: Algebra,
    pub bimod: Bimodule,
    /// Canonical lift `C → C ⊗ C` of the coproduct.
    pub delta: Mat,
    /// Counit `C → A`.
    pub eps: Mat,
    cc: TensorSpace,
}

impl Coring {
    /// Checks bilinearity, coassociativity and both counit laws, in that order.
    pub fn new(bimod: Bimodule, delta_lift: Mat, eps: Mat) -> Result<Coring> {
        if bimod.left != bimod.right {
            return Err(Error::MiddleMismatch);
        }
        let alg = bimod.left.clone();
        let field = alg.field();
        let (n, da) = (bimod.dim, alg.dim());
        if delta_lift.shape() != (n * n, n) {
            return Err(Error::DimensionMismatch {
                context: "coproduct lift",
                expected: n * n,
                found: delta_lift.rows(),
            });
        }
        if eps.shape() != (da, n) {
            return Err(Error::DimensionMismatch {
                context: "counit",
                expected: da,
                found: eps.rows(),
            });
        }
        let cc = TensorSpace::new(field, &[n, n], &[Some(Junction::new(da, &bimod.ract, &bimod.lact))])?;
        let id_n = Mat::identity(field, n);
        let id_a = alg.identity();

        let left = &delta_lift * &bimod.lact;
        let left_other = &bimod.lact.kron(&id_n) * &id_a.kron(&delta_lift);
        if let Some(c) = cc.first_difference(&left, &left_other) {
            return Err(Error::violation(Axiom::Bilinearity, unravel(c, &[da, n])));
        }
        let right = &delta_lift * &bimod.ract;
        let right_other = &id_n.kron(&bimod.ract) * &delta_lift.kron(&id_a);
        if let Some(c) = cc.first_difference(&right, &right_other) {
            return Err(Error::violation(Axiom::Bilinearity, unravel(c, &[n, da])));
        }
        if let Some(c) = (&eps * &bimod.lact).first_diff_col(&(alg.mult() * &id_a.kron(&eps))) {
            return Err(Error::violation(Axiom::Bilinearity, unravel(c, &[da, n])));
        }
        if let Some(c) = (&eps * &bimod.ract).first_diff_col(&(alg.mult() * &eps.kron(&id_a))) {
            return Err(Error::violation(Axiom::Bilinearity, unravel(c, &[n, da])));
        }

        let ccc = TensorSpace::new(
            field,
            &[n, n, n],
            &[
                Some(Junction::new(da, &bimod.ract, &bimod.lact)),
                Some(Junction::new(da, &bimod.ract, &bimod.lact)),
            ],
        )?;
        let lhs = &delta_lift.kron(&id_n) * &delta_lift;
        let rhs = &id_n.kron(&delta_lift) * &delta_lift;
        if let Some(c) = ccc.first_difference(&lhs, &rhs) {
            return Err(Error::violation(Axiom::Coassoc, vec![c]));
        }
        let counit_left = &(&bimod.lact * &eps.kron(&id_n)) * &delta_lift;
        if let Some(c) = counit_left.first_diff_col(&id_n) {
            return Err(Error::violation(Axiom::CounitLeft, vec![c]));
        }
        let counit_right = &(&bimod.ract * &id_n.kron(&eps)) * &delta_lift;
        if let Some(c) = counit_right.first_diff_col(&id_n) {
            return Err(Error::violation(Axiom::CounitRight, vec![c]));
        }
        let delta = cc.canonical(&delta_lift);
        Ok(Coring {
            alg,
            bimod,
            delta,
            eps,
            cc,
        })
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.bimod.dim
    }

    /// `C ⊗_A C`.
    pub fn cc(&self) -> &TensorSpace {
        &self.cc
    }

    /// Coproduct in `C ⊗_A C` coordinates.
    pub fn coproduct(&self) -> Mat {
        self.cc.project(&self.delta)
    }

    /// `c ↦ a·c` for a basis element `a`.
    pub fn left_mult(&self, a: usize) -> Mat {
        let field = self.field();
        &self.bimod.lact * &Mat::unit_column(field, self.alg.dim(), a).kron(&Mat::identity(field, self.dim()))
    }
}

/// Validated coring from its pieces.
pub fn make_coring(bimod: Bimodule, delta_lift: Mat, eps: Mat) -> Result<Coring> {
    Coring::new(bimod, delta_lift, eps)
}

/// A right comodule `ρ: M → M ⊗_A C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comodule {
    pub coring: Coring,
    pub module: RightModule,
    /// Canonical lift `M → M ⊗ C`.
    pub rho: Mat,
    space: TensorSpace,
}

impl Comodule {
    /// Checks right `A`-linearity, coassociativity and counitality, in that order.
    pub fn new(coring: Coring, module: RightModule, rho_lift: Mat) -> Result<Comodule> {
        if module.alg != coring.alg {
            return Err(Error::MiddleMismatch);
        }
        let field = coring.field();
        let (m, n, da) = (module.dim, coring.dim(), coring.alg.dim());
        if rho_lift.shape() != (m * n, m) {
            return Err(Error::DimensionMismatch {
                context: "coaction lift",
                expected: m * n,
                found: rho_lift.rows(),
            });
        }
        let space = TensorSpace::new(field, &[m, n], &[Some(Junction::new(da, &module.act, &coring.bimod.lact))])?;
        let id_m = Mat::identity(field, m);
        let id_n = Mat::identity(field, n);

        let lin = &rho_lift * &module.act;
        let lin_other = &id_m.kron(&coring.bimod.ract) * &rho_lift.kron(&coring.alg.identity());
        if let Some(c) = space.first_difference(&lin, &lin_other) {
            return Err(Error::violation(Axiom::ALinearity, unravel(c, &[m, da])));
        }
        let mcc = TensorSpace::new(
            field,
            &[m, n, n],
            &[
                Some(Junction::new(da, &module.act, &coring.bimod.lact)),
                Some(Junction::new(da, &coring.bimod.ract, &coring.bimod.lact)),
            ],
        )?;
        let lhs = &rho_lift.kron(&id_n) * &rho_lift;
        let rhs = &id_m.kron(&coring.delta) * &rho_lift;
        if let Some(c) = mcc.first_difference(&lhs, &rhs) {
            return Err(Error::violation(Axiom::Coassoc, vec![c]));
        }
        let counit = &(&module.act * &id_m.kron(&coring.eps)) * &rho_lift;
        if let Some(c) = counit.first_diff_col(&id_m) {
            return Err(Error::violation(Axiom::Counit, vec![c]));
        }
        let rho = space.canonical(&rho_lift);
        Ok(Comodule {
            coring,
            module,
            rho,
            space,
        })
    }

    /// `C` with coaction `Δ`.
    pub fn regular(c: &Coring) -> Comodule {
        Comodule {
            coring: c.clone(),
            module: c.bimod.right_module(),
            rho: c.delta.clone(),
            space: c.cc.clone(),
        }
    }

    pub fn zero(c: &Coring) -> Comodule {
        let field = c.field();
        Comodule::new(c.clone(), RightModule::zero(&c.alg), Mat::zeros(field, 0, 0)).expect("zero comodule")
    }

    /// `X ⊗_A C` with coaction `X ⊗_A Δ`.
    pub fn cofree(c: &Coring, x: &RightModule) -> Result<Comodule> {
        let field = c.field();
        let n = c.dim();
        let xc = TensorSpace::new(field, &[x.dim, n], &[Some(Junction::new(c.alg.dim(), &x.act, &c.bimod.lact))])?;
        let act = right_action_on_last(&xc, &c.bimod.ract, c.alg.dim());
        let module = RightModule::new(c.alg.clone(), xc.dim(), act)?;
        let rho = &(&xc.projection().kron(&Mat::identity(field, n)) * &Mat::identity(field, x.dim).kron(&c.delta))
            * &xc.section();
        Comodule::new(c.clone(), module, rho)
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.coring != other.coring {
            return Err(Error::MiddleMismatch);
        }
        let module = self.module.direct_sum(&other.module);
        // (M ⊕ N) ⊗ C is M ⊗ C stacked over N ⊗ C.
        let rho = block_diag(&self.rho, &other.rho);
        Comodule::new(self.coring.clone(), module, rho)
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn field(&self) -> Field {
        self.coring.field()
    }

    /// `M ⊗_A C`.
    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    /// Coaction in `M ⊗_A C` coordinates.
    pub fn coaction(&self) -> Mat {
        self.space.project(&self.rho)
    }
}

pub(crate) fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let field = a.field();
    let top = a.hstack(&Mat::zeros(field, a.rows(), b.cols()));
    let bottom = Mat::zeros(field, b.rows(), a.cols()).hstack(b);
    top.vstack(&bottom)
}

/// Validated comodule from its pieces.
pub fn make_comodule(c: &Coring, module: RightModule, rho_lift: Mat) -> Result<Comodule> {
    Comodule::new(c.clone(), module, rho_lift)
}

/// A left comodule `λ: N → C ⊗_A N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftComodule {
    pub coring: Coring,
    pub module: LeftModule,
    /// Canonical lift `N → C ⊗ N`.
    pub lambda: Mat,
    space: TensorSpace,
}

impl LeftComodule {
    pub fn new(coring: Coring, module: LeftModule, lambda_lift: Mat) -> Result<LeftComodule> {
        if module.alg != coring.alg {
            return Err(Error::MiddleMismatch);
        }
        let field = coring.field();
        let (d, n, da) = (module.dim, coring.dim(), coring.alg.dim());
        if lambda_lift.shape() != (n * d, d) {
            return Err(Error::DimensionMismatch {
                context: "left coaction lift",
                expected: n * d,
                found: lambda_lift.rows(),
            });
        }
        let space = TensorSpace::new(field, &[n, d], &[Some(Junction::new(da, &coring.bimod.ract, &module.act))])?;
        let id_d = Mat::identity(field, d);
        let id_n = Mat::identity(field, n);
        let lin = &lambda_lift * &module.act;
        let lin_other = &coring.bimod.lact.kron(&id_d) * &coring.alg.identity().kron(&lambda_lift);
        if let Some(c) = space.first_difference(&lin, &lin_other) {
            return Err(Error::violation(Axiom::LeftALinearity, unravel(c, &[da, d])));
        }
        let ccn = TensorSpace::new(
            field,
            &[n, n, d],
            &[
                Some(Junction::new(da, &coring.bimod.ract, &coring.bimod.lact)),
                Some(Junction::new(da, &coring.bimod.ract, &module.act)),
            ],
        )?;
        let lhs = &id_n.kron(&lambda_lift) * &lambda_lift;
        let rhs = &coring.delta.kron(&id_d) * &lambda_lift;
        if let Some(c) = ccn.first_difference(&lhs, &rhs) {
            return Err(Error::violation(Axiom::Coassoc, vec![c]));
        }
        let counit = &(&module.act * &coring.eps.kron(&id_d)) * &lambda_lift;
        if let Some(c) = counit.first_diff_col(&id_d) {
            return Err(Error::violation(Axiom::Counit, vec![c]));
        }
        let lambda = space.canonical(&lambda_lift);
        Ok(LeftComodule {
            coring,
            module,
            lambda,
            space,
        })
    }

    /// `C` with coaction `Δ`.
    pub fn regular(c: &Coring) -> LeftComodule {
        LeftComodule {
            coring: c.clone(),
            module: c.bimod.left_module(),
            lambda: c.delta.clone(),
            space: c.cc.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// `C ⊗_A N`.
    pub fn space(&self) -> &TensorSpace {
        &self.space
    }
}

/// Right `A`-linearity of `f: M → N` as a violation witness `(m, a)`.
pub fn right_linearity_witness(f: &Mat, m: &RightModule, n: &RightModule) -> Option<Vec<usize>> {
    let lhs = f * &m.act;
    let rhs = &n.act * &f.kron(&m.alg.identity());
    lhs.first_diff_col(&rhs).map(|c| unravel(c, &[m.dim, m.alg.dim()]))
}

/// Accepts iff `f` is right `A`-linear and `ρ^N ∘ f = (f ⊗_A C) ∘ ρ^M`.
pub fn check_colinear(f: &Mat, m: &Comodule, n: &Comodule) -> Result<()> {
    if m.coring != n.coring {
        return Err(Error::MiddleMismatch);
    }
    if f.shape() != (n.dim(), m.dim()) {
        return Err(Error::DimensionMismatch {
            context: "colinear map",
            expected: n.dim() * m.dim(),
            found: f.rows() * f.cols(),
        });
    }
    if let Some(w) = right_linearity_witness(f, &m.module, &n.module) {
        return Err(Error::NotColinear {
            axiom: Axiom::ALinearity,
            witness: w,
        });
    }
    let id_c = Mat::identity(f.field(), m.coring.dim());
    let lhs = &n.rho * f;
    let rhs = &f.kron(&id_c) * &m.rho;
    if let Some(c) = n.space.first_difference(&lhs, &rhs) {
        return Err(Error::NotColinear {
            axiom: Axiom::Colinearity,
            witness: vec![c],
        });
    }
    Ok(())
}

/// Checks that a left `C`-coaction `λ` and a right `D`-coaction `σ` on the
/// `(A, B)`-bimodule `m` commute. The identity is tested once in the
/// single-step space `C ⊗_A M ⊗_B D` and once as `D`-colinearity of `λ`
/// through the iterated space `(C ⊗_A M) ⊗_B D`; the two verdicts must agree.
pub fn check_bicomodule(m: &Bimodule, c: &Coring, lambda: &Mat, d: &Coring, sigma: &Mat) -> Result<()> {
    if m.left != c.alg || m.right != d.alg {
        return Err(Error::MiddleMismatch);
    }
    let field = m.field();
    let (dm, nc, nd) = (m.dim, c.dim(), d.dim());
    let (da, db) = (c.alg.dim(), d.alg.dim());
    if lambda.shape() != (nc * dm, dm) || sigma.shape() != (dm * nd, dm) {
        return Err(Error::DimensionMismatch {
            context: "bicomodule coactions",
            expected: nc * dm,
            found: lambda.rows(),
        });
    }
    let id_c = Mat::identity(field, nc);
    let id_d = Mat::identity(field, nd);

    let single = TensorSpace::new(
        field,
        &[nc, dm, nd],
        &[
            Some(Junction::new(da, &c.bimod.ract, &m.lact)),
            Some(Junction::new(db, &m.ract, &d.bimod.lact)),
        ],
    )?;
    let lhs = &lambda.kron(&id_d) * sigma;
    let rhs = &id_c.kron(sigma) * lambda;
    let direct = single.first_difference(&lhs, &rhs);

    let cm = TensorSpace::new(field, &[nc, dm], &[Some(Junction::new(da, &c.bimod.ract, &m.lact))])?;
    let ract_cm = right_action_on_last(&cm, &m.ract, db);
    let cmd = TensorSpace::new(field, &[cm.dim(), nd], &[Some(Junction::new(db, &ract_cm, &d.bimod.lact))])?;
    let lambda_q = cm.project(lambda);
    let coaction_cm =
        &(&cm.projection().kron(&id_d) * &id_c.kron(sigma)) * &cm.section();
    let via_colinear = cmd.first_difference(&(&coaction_cm * &lambda_q), &(&lambda_q.kron(&id_d) * sigma));

    match (direct, via_colinear) {
        (None, None) => Ok(()),
        (Some(c), Some(_)) => Err(Error::violation(Axiom::Bicomodule, vec![c])),
        _ => Err(Error::NotWellDefined {
            context: "bicomodule formulations disagree",
        }),
    }
}

/// Verifies that `γ: C → D` between corings over the same algebra is a
/// bimodule map compatible with counits and coproducts.
pub fn check_coring_morphism(gamma: &Mat, c: &Coring, d: &Coring) -> Result<()> {
    if c.alg != d.alg {
        return Err(Error::MiddleMismatch);
    }
    let (nc, nd, da) = (c.dim(), d.dim(), c.alg.dim());
    if gamma.shape() != (nd, nc) {
        return Err(Error::DimensionMismatch {
            context: "coring morphism",
            expected: nd * nc,
            found: gamma.rows() * gamma.cols(),
        });
    }
    let id_a = c.alg.identity();
    let fail = |axiom, witness| Err(Error::NotCoringMorphism { axiom, witness });
    if let Some(col) = (gamma * &c.bimod.lact).first_diff_col(&(&d.bimod.lact * &id_a.kron(gamma))) {
        return fail(Axiom::Bilinearity, unravel(col, &[da, nc]));
    }
    if let Some(col) = (gamma * &c.bimod.ract).first_diff_col(&(&d.bimod.ract * &gamma.kron(&id_a))) {
        return fail(Axiom::Bilinearity, unravel(col, &[nc, da]));
    }
    if let Some(col) = (&d.eps * gamma).first_diff_col(&c.eps) {
        return fail(Axiom::CounitCompatible, vec![col]);
    }
    let lhs = &d.delta * gamma;
    let rhs = &gamma.kron(gamma) * &c.delta;
    if let Some(col) = d.cc.first_difference(&lhs, &rhs) {
        return fail(Axiom::CoproductCompatible, vec![col]);
    }
    Ok(())
}

/// `*C`: left `A`-linear maps `C → A` with `(f*g)(c) = Σ g(c₍₁₎ f(c₍₂₎))` and
/// unit `ε`.
#[derive(Clone, Debug)]
pub struct DualRing {
    pub basis: Vec<Mat>,
    pub alg: Algebra,
    coords: Coordinates,
}

impl DualRing {
    /// Coordinates of a left `A`-linear map `C → A`.
    pub fn coordinates(&self, f: &Mat) -> Option<Vec<Scalar>> {
        self.coords.of(f)
    }

    /// The map `C → A` with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Mat {
        let field = self.alg.field();
        let (r, c) = self.basis.first().map_or((0, 0), Mat::shape);
        let mut out = Mat::zeros(field, r, c);
        for (b, x) in self.basis.iter().zip(coords) {
            if !x.is_zero() {
                out = &out + &b.scale(x);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `(f*g) = g ∘ ρ_C ∘ (C ⊗ f) ∘ Δ` evaluated through the lift.
pub fn dual_product(c: &Coring, f: &Mat, g: &Mat) -> Mat {
    let id_c = Mat::identity(c.field(), c.dim());
    &(&(g * &c.bimod.ract) * &id_c.kron(f)) * &c.delta
}

/// Left `A`-linear maps `C → A` as a matrix space.
pub fn left_linear_functionals(c: &Coring) -> Vec<Mat> {
    let field = c.field();
    crate::algmod::hom_space(field, c.alg.dim(), c.dim(), |g| {
        &(g * &c.bimod.lact) - &(c.alg.mult() * &c.alg.identity().kron(g))
    })
}

pub fn dual_ring(c: &Coring) -> Result<DualRing> {
    let field = c.field();
    let basis = left_linear_functionals(c);
    let alg = Algebra::from_basis(field, &basis, &c.eps, |f, g| dual_product(c, f, g))?;
    let coords = Coordinates::new(field, &basis);
    Ok(DualRing { basis, alg, coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::AlgebraMap;
    use crate::constructions::{group_coalgebra, sweedler_coring, trivial_coring};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn sw() -> Coring {
        let d2 = Algebra::diagonal(f2(), 2);
        sweedler_coring(&AlgebraMap::unit_map(&d2)).unwrap()
    }

    #[test]
    fn trivial_corings_validate() {
        let f = f2();
        for a in [Algebra::ground(f), Algebra::diagonal(f, 2), Algebra::matrix(f, 2)] {
            let c = trivial_coring(&a);
            assert_eq!(c.dim(), a.dim());
            Coring::new(c.bimod.clone(), c.delta.clone(), c.eps.clone()).unwrap();
        }
    }

    #[test]
    fn sweedler_with_zero_counit_fails() {
        let c = sw();
        let zero = Mat::zeros(f2(), 2, 4);
        let err = Coring::new(c.bimod.clone(), c.delta.clone(), zero).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::CounitLeft,
                ..
            }
        ));
    }

    #[test]
    fn regular_and_sum_comodules() {
        let c = sw();
        let reg = Comodule::regular(&c);
        let again = Comodule::new(c.clone(), reg.module.clone(), reg.rho.clone()).unwrap();
        assert_eq!(again, reg);
        let sum = reg.direct_sum(&reg).unwrap();
        assert_eq!(sum.dim(), 8);
        let zeroed = Mat::zeros(f2(), 16, 4);
        let err = Comodule::new(c.clone(), reg.module.clone(), zeroed).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::Counit, .. }));
    }

    #[test]
    fn coproduct_and_left_multiplications_are_colinear() {
        let c = sw();
        let reg = Comodule::regular(&c);
        check_colinear(&Mat::identity(f2(), 4), &reg, &reg).unwrap();
        let cofree = Comodule::cofree(&c, &c.bimod.right_module()).unwrap();
        check_colinear(&c.coproduct(), &reg, &cofree).unwrap();
        for a in 0..c.alg.dim() {
            check_colinear(&c.left_mult(a), &reg, &reg).unwrap();
        }
    }

    #[test]
    fn non_colinear_map_is_rejected() {
        let c = sw();
        let reg = Comodule::regular(&c);
        // c ↦ c·e₀ is right linear only up to commutativity, and not colinear
        let f = &c.bimod.ract * &Mat::identity(f2(), 4).kron(&Mat::unit_column(f2(), 2, 0));
        assert!(check_colinear(&f, &reg, &reg).is_err());
    }

    #[test]
    fn regular_bicomodule_accepts() {
        let c = sw();
        check_bicomodule(&c.bimod, &c, &c.delta, &c, &c.delta).unwrap();
        // a zero coaction commutes with everything; it is the counit that fails
        let zero = Mat::zeros(f2(), 16, 4);
        check_bicomodule(&c.bimod, &c, &c.delta, &c, &zero).unwrap();
        let ext = crate::extension::CoringExtension::new(c.clone(), c.clone(), c.bimod.ract.clone(), zero);
        assert!(matches!(ext, Err(Error::AxiomViolation { axiom: Axiom::Counit, .. })));
    }

    #[test]
    fn dual_of_group_likes_is_pointwise() {
        let f = Field::prime(3).unwrap();
        let gc2 = group_coalgebra(f, 2).to_coring();
        let dual = dual_ring(&gc2).unwrap();
        assert_eq!(dual.dim(), 2);
        let diag = Algebra::diagonal(f, 2);
        let isos: Vec<_> = crate::algmod::enumerate_algebra_maps(&dual.alg, &diag)
            .unwrap()
            .into_iter()
            .filter(AlgebraMap::is_isomorphism)
            .collect();
        assert!(!isos.is_empty());
    }

    #[test]
    fn dual_of_trivial_coring_is_the_algebra() {
        let a = Algebra::upper_triangular(f2());
        let c = trivial_coring(&a);
        let dual = dual_ring(&c).unwrap();
        // f ↦ f(1) is an algebra isomorphism *A → A
        let one = a.unit();
        let cols: Vec<Vec<Scalar>> = dual.basis.iter().map(|f| (f * one).col_vec(0)).collect();
        let m = Mat::from_rows(a.field(), a.dim(), cols).transpose();
        let iso = AlgebraMap::new(dual.alg.clone(), a.clone(), m).unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn dual_ring_dimension_formula() {
        let c = sw();
        let dual = dual_ring(&c).unwrap();
        assert_eq!(dual.dim(), 4);
    }
}
