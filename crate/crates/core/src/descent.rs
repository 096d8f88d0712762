//! Descent data for an algebra map `ι: B → A`, their identification with
//! comodules over `A ⊗_B A`, and the transport of descent data along a chain
//! `D → B → A`.

use crate::algmod::{AlgebraMap, Bimodule, RightModule};
use crate::constructions::{restricted_actions, sweedler_coring, sweedler_space};
use crate::coring::{check_colinear, right_linearity_witness, Comodule, Coring};
use crate::error::{Axiom, Error, Result};
use crate::exactla::{unravel, Mat};
use crate::extension::{induced_coaction, CoringExtension};
use crate::tensorcat::{Junction, TensorSpace};

/// `(M, f)` with `f: M → M ⊗_B A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentDatum {
    pub iota: AlgebraMap,
    pub module: RightModule,
    /// Canonical lift `M → M ⊗ A`.
    pub f: Mat,
}

/// `M ⊗_B A` with `B` acting through `ι` on both sides.
pub fn module_over_b_space(iota: &AlgebraMap, module: &RightModule) -> Result<TensorSpace> {
    let a = &iota.target;
    let m_b = module.restrict(iota);
    let (_, lact) = restricted_actions(iota);
    TensorSpace::new(
        a.field(),
        &[module.dim, a.dim()],
        &[Some(Junction::new(iota.source.dim(), &m_b.act, &lact))],
    )
}

impl DescentDatum {
    /// Checks right `A`-linearity of `f`, the unit diagram and the cocycle
    /// diagram, in that order.
    pub fn new(iota: AlgebraMap, module: RightModule, f_lift: Mat) -> Result<DescentDatum> {
        crate::algmod::check_algebra_map(&iota)?;
        let a = &iota.target;
        if module.alg != *a {
            return Err(Error::MiddleMismatch);
        }
        let field = a.field();
        let (dm, da, db) = (module.dim, a.dim(), iota.source.dim());
        if f_lift.shape() != (dm * da, dm) {
            return Err(Error::DimensionMismatch {
                context: "descent datum",
                expected: dm * da,
                found: f_lift.rows(),
            });
        }
        let ma = module_over_b_space(&iota, &module)?;
        let id_m = Mat::identity(field, dm);
        let id_a = a.identity();

        let lhs = &f_lift * &module.act;
        let rhs = &id_m.kron(a.mult()) * &f_lift.kron(&id_a);
        if let Some(c) = ma.first_difference(&lhs, &rhs) {
            return Err(Error::violation(Axiom::ALinearity, unravel(c, &[dm, da])));
        }
        let rho_mb = ma.quotient().descends(&module.act)?.ok_or(Error::NotWellDefined {
            context: "multiplication M ⊗_B A → M",
        })?;
        if let Some(c) = (&rho_mb * &ma.project(&f_lift)).first_diff_col(&id_m) {
            return Err(Error::violation(Axiom::DescentUnit, vec![c]));
        }
        let m_b = module.restrict(&iota);
        let (ract_a, lact_a) = restricted_actions(&iota);
        let maa = TensorSpace::new(
            field,
            &[dm, da, da],
            &[
                Some(Junction::new(db, &m_b.act, &lact_a)),
                Some(Junction::new(db, &ract_a, &lact_a)),
            ],
        )?;
        let lhs = &f_lift.kron(&id_a) * &f_lift;
        let rhs = &id_m.kron(a.unit()).kron(&id_a) * &f_lift;
        if let Some(c) = maa.first_difference(&lhs, &rhs) {
            return Err(Error::violation(Axiom::DescentCocycle, vec![c]));
        }
        let f = ma.canonical(&f_lift);
        Ok(DescentDatum { iota, module, f })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }
}

pub fn check_descent_datum(d: &DescentDatum) -> Result<()> {
    DescentDatum::new(d.iota.clone(), d.module.clone(), d.f.clone()).map(|_| ())
}

/// `m ↦ m ⊗ (1 ⊗ a)` read through `M ⊗_A (A ⊗_B A) ≅ M ⊗_B A`.
pub fn descent_to_comodule(d: &DescentDatum) -> Result<Comodule> {
    check_descent_datum(d)?;
    let c = sweedler_coring(&d.iota)?;
    let a = &d.iota.target;
    let space = sweedler_space(&d.iota)?;
    let one_tensor = space.projection() * &a.unit().kron(&a.identity());
    let rho = &Mat::identity(a.field(), d.dim()).kron(&one_tensor) * &d.f;
    Comodule::new(c, d.module.clone(), rho)
}

/// `f = (m ⊗ (a ⊗ a') ↦ ma ⊗ a') ∘ ρ`.
pub fn comodule_to_descent(m: &Comodule, iota: &AlgebraMap) -> Result<DescentDatum> {
    let c = sweedler_coring(iota)?;
    if m.coring != c {
        return Err(Error::MiddleMismatch);
    }
    let a = &iota.target;
    let space = sweedler_space(iota)?;
    let unfold = &m.module.act.kron(&a.identity()) * &Mat::identity(a.field(), m.dim()).kron(&space.section());
    DescentDatum::new(iota.clone(), m.module.clone(), &unfold * &m.rho)
}

/// A morphism of descent data: right `A`-linear and `(g ⊗_B A) ∘ f = f' ∘ g`.
pub fn check_descent_morphism(g: &Mat, src: &DescentDatum, dst: &DescentDatum) -> Result<()> {
    if src.iota != dst.iota {
        return Err(Error::MiddleMismatch);
    }
    if g.shape() != (dst.dim(), src.dim()) {
        return Err(Error::DimensionMismatch {
            context: "descent morphism",
            expected: dst.dim() * src.dim(),
            found: g.rows() * g.cols(),
        });
    }
    if let Some(w) = right_linearity_witness(g, &src.module, &dst.module) {
        return Err(Error::NotColinear {
            axiom: Axiom::ALinearity,
            witness: w,
        });
    }
    let space = module_over_b_space(&dst.iota, &dst.module)?;
    let lhs = &g.kron(&dst.iota.target.identity()) * &src.f;
    let rhs = &dst.f * g;
    if let Some(c) = space.first_difference(&lhs, &rhs) {
        return Err(Error::NotColinear {
            axiom: Axiom::Colinearity,
            witness: vec![c],
        });
    }
    Ok(())
}

/// `ι_B: D → B`, `ι_A: B → A`, a right `B`-multiplication on `A`, and
/// `φ: A → A ⊗_B A ⊗_D B` (as a lift into `A ⊗ A ⊗ B`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainData {
    pub iota_b: AlgebraMap,
    pub iota_a: AlgebraMap,
    pub rho_a: Mat,
    pub phi: Mat,
}

struct ChainSpaces {
    /// `A ⊗_B A`.
    aa: TensorSpace,
    /// `A ⊗_B A ⊗_D B`.
    aab: TensorSpace,
}

impl ChainData {
    fn validate_shapes(&self) -> Result<()> {
        if self.iota_a.source != self.iota_b.target {
            return Err(Error::MiddleMismatch);
        }
        crate::algmod::check_algebra_map(&self.iota_a)?;
        crate::algmod::check_algebra_map(&self.iota_b)?;
        let (da, db) = (self.iota_a.target.dim(), self.iota_a.source.dim());
        if self.rho_a.shape() != (da, da * db) || self.phi.shape() != (da * da * db, da) {
            return Err(Error::DimensionMismatch {
                context: "chain data",
                expected: da * da * db,
                found: self.phi.rows(),
            });
        }
        Ok(())
    }

    fn spaces(&self) -> Result<ChainSpaces> {
        let a = &self.iota_a.target;
        let b = &self.iota_a.source;
        let field = a.field();
        let (da, db, dd) = (a.dim(), b.dim(), self.iota_b.source.dim());
        let (ract_a, lact_a) = restricted_actions(&self.iota_a);
        let rho_ad = &self.rho_a * &a.identity().kron(&self.iota_b.matrix);
        let (_, lact_b) = restricted_actions(&self.iota_b);
        let aa = TensorSpace::new(field, &[da, da], &[Some(Junction::new(db, &ract_a, &lact_a))])?;
        let aab = TensorSpace::new(
            field,
            &[da, da, db],
            &[
                Some(Junction::new(db, &ract_a, &lact_a)),
                Some(Junction::new(dd, &rho_ad, &lact_b)),
            ],
        )?;
        Ok(ChainSpaces { aa, aab })
    }
}

/// Checks the right `B`-multiplication, `(B, B)`-linearity of `φ`, then
/// diagrams (a), (b), (c), in that order.
pub fn check_chain(data: &ChainData) -> Result<()> {
    data.validate_shapes()?;
    let a = &data.iota_a.target;
    let b = &data.iota_a.source;
    let field = a.field();
    let (da, db, dd) = (a.dim(), b.dim(), data.iota_b.source.dim());
    let (ract_a, lact_a) = restricted_actions(&data.iota_a);
    Bimodule::new(b.clone(), b.clone(), da, lact_a.clone(), data.rho_a.clone())?;
    let sp = data.spaces()?;
    let rho_ad = &data.rho_a * &a.identity().kron(&data.iota_b.matrix);
    let (ract_b, lact_b) = restricted_actions(&data.iota_b);
    let id_a = a.identity();
    let id_b = b.identity();
    let phi = &data.phi;

    let lhs = phi * &lact_a;
    let rhs = &lact_a.kron(&id_a).kron(&id_b) * &id_b.kron(phi);
    if let Some(c) = sp.aab.first_difference(&lhs, &rhs) {
        return Err(Error::violation(Axiom::BLinearity, unravel(c, &[db, da])));
    }
    let lhs = phi * &data.rho_a;
    let rhs = &id_a.kron(&id_a).kron(b.mult()) * &phi.kron(&id_b);
    if let Some(c) = sp.aab.first_difference(&lhs, &rhs) {
        return Err(Error::violation(Axiom::BLinearity, unravel(c, &[da, db])));
    }

    // (a)  a ↦ 1 ⊗ a  versus  (A ⊗_B ρ_{A|D}) ∘ φ
    let lhs = &id_a.kron(&data.rho_a) * phi;
    let rhs = a.unit().kron(&id_a);
    if let Some(c) = sp.aa.first_difference(&lhs, &rhs) {
        return Err(Error::violation(Axiom::ChainA, vec![c]));
    }

    // (b)  (μ ⊗ A ⊗ B ⊗ B)(A ⊗ φ ⊗ B)φ  versus  (A ⊗ A ⊗ ι_B ⊗ B)φ
    let aabb = TensorSpace::new(
        field,
        &[da, da, db, db],
        &[
            Some(Junction::new(db, &ract_a, &lact_a)),
            Some(Junction::new(dd, &rho_ad, &lact_b)),
            Some(Junction::new(dd, &ract_b, &lact_b)),
        ],
    )?;
    let id_ab = Mat::identity(field, da * db);
    let lhs = &(&a.mult().kron(&id_ab).kron(&id_b) * &id_a.kron(phi).kron(&id_b)) * phi;
    let rhs = &id_a.kron(&id_a).kron(b.unit()).kron(&id_b) * phi;
    if let Some(c) = aabb.first_difference(&lhs, &rhs) {
        return Err(Error::violation(Axiom::ChainB, vec![c]));
    }

    // (c)  a ↦ 1 ⊗ φ(a)  versus  (A ⊗ ι_A ⊗ A ⊗ B)φ
    let aaab = TensorSpace::new(
        field,
        &[da, da, da, db],
        &[
            Some(Junction::new(db, &ract_a, &lact_a)),
            Some(Junction::new(db, &ract_a, &lact_a)),
            Some(Junction::new(dd, &rho_ad, &lact_b)),
        ],
    )?;
    let lhs = a.unit().kron(phi);
    let rhs = &id_a.kron(a.unit()).kron(&id_ab) * phi;
    if let Some(c) = aaab.first_difference(&lhs, &rhs) {
        return Err(Error::violation(Axiom::ChainC, vec![c]));
    }
    Ok(())
}

/// The pair `(ρ_C, σ)` on `A ⊗_B A` over `B ⊗_D B` built from the data
/// without any checks: `(a ⊗ a')b = a ⊗ ρ_A(a' ⊗ b)` and
/// `σ(a' ⊗ a) = a'φ(a)` with `x ⊗ y ⊗ b ↦ (x ⊗ y) ⊗ (1 ⊗ b)`.
pub fn assemble_chain_extension(data: &ChainData) -> Result<(Coring, Coring, Mat, Mat)> {
    data.validate_shapes()?;
    let a = &data.iota_a.target;
    let b = &data.iota_a.source;
    let field = a.field();
    let c = sweedler_coring(&data.iota_a)?;
    let d = sweedler_coring(&data.iota_b)?;
    let cs = sweedler_space(&data.iota_a)?;
    let ds = sweedler_space(&data.iota_b)?;
    let id_a = a.identity();
    let id_b = b.identity();
    let ract = &(cs.projection() * &id_a.kron(&data.rho_a)) * &cs.section().kron(&id_b);
    let to_d = ds.projection() * &b.unit().kron(&id_b);
    let id_ab = Mat::identity(field, a.dim() * b.dim());
    let sigma = &(&(&cs.projection().kron(&to_d) * &a.mult().kron(&id_ab)) * &id_a.kron(&data.phi)) * &cs.section();
    Ok((c, d, ract, sigma))
}

/// Runs [`check_chain`] and, on success, the assembled extension.
pub fn chain_extension(data: &ChainData) -> Result<CoringExtension> {
    check_chain(data)?;
    let (c, d, ract, sigma) = assemble_chain_extension(data)?;
    CoringExtension::new(c, d, ract, sigma)
}

/// `Desc(A|B) → Desc(B|D)` through the comodule identification and the
/// functor induced by the assembled extension.
pub fn descent_functor(data: &ChainData, d: &DescentDatum) -> Result<DescentDatum> {
    if d.iota != data.iota_a {
        return Err(Error::MiddleMismatch);
    }
    let e = chain_extension(data)?;
    let m = descent_to_comodule(d)?;
    let out = induced_coaction(&e, &m)?;
    comodule_to_descent(&out, &data.iota_b)
}

/// Transport of a morphism: verified on both sides, matrix unchanged.
pub fn transport_morphism(g: &Mat, src: &DescentDatum, dst: &DescentDatum) -> Result<Mat> {
    check_descent_morphism(g, src, dst)?;
    check_colinear(g, &descent_to_comodule(src)?, &descent_to_comodule(dst)?)?;
    Ok(g.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::Algebra;
    use crate::field::Field;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn regular_datum(iota: &AlgebraMap) -> DescentDatum {
        // f(a) = 1 ⊗ a
        let a = &iota.target;
        DescentDatum::new(iota.clone(), RightModule::regular(a), a.unit().kron(&a.identity())).unwrap()
    }

    #[test]
    fn identity_datum_accepts() {
        let a = Algebra::upper_triangular(f2());
        let iota = AlgebraMap::identity(&a);
        let d = regular_datum(&iota);
        let m = descent_to_comodule(&d).unwrap();
        assert_eq!(comodule_to_descent(&m, &iota).unwrap(), d);
    }

    #[test]
    fn unit_map_datum_accepts_and_zero_fails() {
        let d2 = Algebra::diagonal(f2(), 2);
        let iota = AlgebraMap::unit_map(&d2);
        regular_datum(&iota);
        let err = DescentDatum::new(iota, RightModule::regular(&d2), Mat::zeros(f2(), 4, 2)).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::DescentUnit,
                ..
            }
        ));
    }

    fn collapsing(a: &Algebra) -> ChainData {
        let id = AlgebraMap::identity(a);
        // φ(a) = 1 ⊗ a ⊗ 1
        let phi = a.unit().kron(&a.identity()).kron(a.unit());
        ChainData {
            iota_b: id.clone(),
            iota_a: id,
            rho_a: a.mult().clone(),
            phi,
        }
    }

    #[test]
    fn collapsing_chain_accepts() {
        let a = Algebra::diagonal(f2(), 2);
        let data = collapsing(&a);
        chain_extension(&data).unwrap();
        let d = regular_datum(&data.iota_a);
        let out = descent_functor(&data, &d).unwrap();
        assert_eq!(out.dim(), d.dim());
    }

    #[test]
    fn zero_phi_fails_at_a() {
        let a = Algebra::diagonal(f2(), 2);
        let data = ChainData {
            phi: Mat::zeros(f2(), 8, 2),
            ..collapsing(&a)
        };
        assert!(matches!(
            check_chain(&data),
            Err(Error::AxiomViolation {
                axiom: Axiom::ChainA,
                ..
            })
        ));
    }
}
