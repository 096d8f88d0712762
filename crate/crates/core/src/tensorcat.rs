//! Tensor products over the field and over algebras.
//!
//! `F₁ ⊗_{A₁} F₂ ⊗_{A₂} ⋯ ⊗ Fₙ` is realized as one quotient of the field
//! tensor product `F₁ ⊗ ⋯ ⊗ Fₙ` (row-major coordinates) by the balancing
//! relations at every junction. Maps between such spaces are handled through
//! lifts to the ambient coordinates and compared only after projection.

use crate::algmod::{Bimodule, LeftModule, RightModule};
use crate::coring::{Comodule, LeftComodule};
use crate::error::{Error, Result};
use crate::exactla::{Mat, QuotientSpace};
use crate::field::Field;
use crate::limits;

/// Row-major pairing `(i, j) ↦ i·dim_n + j` of `M ⊗ N` over the field.
pub fn tensor_k(dim_m: usize, dim_n: usize) -> impl Fn(usize, usize) -> usize {
    debug_assert!(dim_m > 0 || dim_n == 0 || dim_m == 0);
    move |i, j| i * dim_n + j
}

/// Balancing data at a junction `X ⊗_A Y`: the right `A`-action on the left
/// factor and the left `A`-action on the right factor.
#[derive(Clone, Copy, Debug)]
pub struct Junction<'a> {
    pub alg_dim: usize,
    pub ract: &'a Mat,
    pub lact: &'a Mat,
}

impl<'a> Junction<'a> {
    pub fn new(alg_dim: usize, ract: &'a Mat, lact: &'a Mat) -> Junction<'a> {
        Junction { alg_dim, ract, lact }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    dims: Vec<usize>,
    q: QuotientSpace,
}

impl TensorSpace {
    /// `junctions[i]` sits between factors `i` and `i + 1`; `None` means ⊗ over
    /// the field.
    pub fn new(field: Field, dims: &[usize], junctions: &[Option<Junction<'_>>]) -> Result<TensorSpace> {
        assert!(!dims.is_empty());
        assert_eq!(junctions.len() + 1, dims.len());
        let ambient: usize = dims.iter().product();
        limits::guard_dim(ambient)?;

        // Quotient factor by factor; the running projection kills exactly the
        // relations of the single-step quotient.
        let mut proj = Mat::identity(field, dims[0]);
        let mut sect = Mat::identity(field, dims[0]);
        let mut amb = dims[0];
        for (i, junction) in junctions.iter().enumerate() {
            let d = dims[i + 1];
            let last = dims[i];
            let q = proj.rows();
            let id_d = Mat::identity(field, d);
            match junction {
                None => {
                    proj = proj.kron(&id_d);
                    sect = sect.kron(&id_d);
                }
                Some(j) => {
                    check_junction(j, last, d)?;
                    let pre = if last == 0 { 0 } else { amb / last };
                    let ract_amb = Mat::identity(field, pre).kron(j.ract);
                    let ract_x = &(&proj * &ract_amb) * &sect.kron(&Mat::identity(field, j.alg_dim));
                    let rel = &ract_x.kron(&id_d) - &Mat::identity(field, q).kron(j.lact);
                    let step = QuotientSpace::new(q * d, &rel.transpose())?;
                    proj = step.projection() * &proj.kron(&id_d);
                    sect = &sect.kron(&id_d) * &step.section();
                }
            }
            amb *= d;
        }
        let q = QuotientSpace::from_projection(&proj)?;
        Ok(TensorSpace {
            dims: dims.to_vec(),
            q,
        })
    }

    /// Plain tensor product over the field.
    pub fn over_k(field: Field, dims: &[usize]) -> TensorSpace {
        let ambient = dims.iter().product();
        TensorSpace {
            dims: dims.to_vec(),
            q: QuotientSpace::trivial(field, ambient),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.q.quo_dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.q.ambient_dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.q
    }

    pub fn projection(&self) -> &Mat {
        self.q.projection()
    }

    pub fn section(&self) -> Mat {
        self.q.section()
    }

    /// Projects a map landing in ambient coordinates.
    pub fn project(&self, lift: &Mat) -> Mat {
        self.q.projection() * lift
    }

    /// Canonical ambient representative of a lift.
    pub fn canonical(&self, lift: &Mat) -> Mat {
        self.q.canonicalize(lift)
    }

    /// First source basis vector on which two lifts differ in the quotient.
    pub fn first_difference(&self, f: &Mat, g: &Mat) -> Option<usize> {
        self.project(f).first_diff_col(&self.project(g))
    }
}

fn check_junction(j: &Junction<'_>, left_dim: usize, right_dim: usize) -> Result<()> {
    if j.ract.shape() != (left_dim, left_dim * j.alg_dim) {
        return Err(Error::DimensionMismatch {
            context: "junction right action",
            expected: left_dim * j.alg_dim,
            found: j.ract.cols(),
        });
    }
    if j.lact.shape() != (right_dim, j.alg_dim * right_dim) {
        return Err(Error::DimensionMismatch {
            context: "junction left action",
            expected: j.alg_dim * right_dim,
            found: j.lact.cols(),
        });
    }
    Ok(())
}

/// `M ⊗_A N` for a right module `M` and left module `N`.
pub fn tensor_over(m: &RightModule, n: &LeftModule) -> Result<TensorSpace> {
    if m.alg != n.alg {
        return Err(Error::MiddleMismatch);
    }
    TensorSpace::new(
        m.alg.field(),
        &[m.dim, n.dim],
        &[Some(Junction::new(m.alg.dim(), &m.act, &n.act))],
    )
}

/// The map induced on quotients by an ambient map `f`, if `f` carries the
/// relations of `src` into those of `dst`.
pub fn induced_map(f: &Mat, src: &TensorSpace, dst: &TensorSpace) -> Result<Option<Mat>> {
    if f.shape() != (dst.ambient_dim(), src.ambient_dim()) {
        return Err(Error::DimensionMismatch {
            context: "induced map",
            expected: dst.ambient_dim() * src.ambient_dim(),
            found: f.rows() * f.cols(),
        });
    }
    src.q.descends(&dst.project(f))
}

/// Right action on a quotient `X = … ⊗ F` through an action on its last factor.
pub fn right_action_on_last(space: &TensorSpace, ract_last: &Mat, alg_dim: usize) -> Mat {
    let field = ract_last.field();
    let last = *space.dims.last().unwrap();
    let pre = if last == 0 { 0 } else { space.ambient_dim() / last };
    let amb = Mat::identity(field, pre).kron(ract_last);
    &(space.projection() * &amb) * &space.section().kron(&Mat::identity(field, alg_dim))
}

/// Left action on a quotient `X = F ⊗ …` through an action on its first factor.
pub fn left_action_on_first(space: &TensorSpace, lact_first: &Mat, alg_dim: usize) -> Mat {
    let field = lact_first.field();
    let first = space.dims[0];
    let post = if first == 0 { 0 } else { space.ambient_dim() / first };
    let amb = lact_first.kron(&Mat::identity(field, post));
    &(space.projection() * &amb) * &Mat::identity(field, alg_dim).kron(&space.section())
}

/// Canonical isomorphisms from the two iterated quotients onto the single-step
/// quotient of `M ⊗ N ⊗ P`.
#[derive(Clone, Debug)]
pub struct AssocNormalizer {
    pub single: TensorSpace,
    pub inner_left: TensorSpace,
    pub left_nested: TensorSpace,
    pub inner_right: TensorSpace,
    pub right_nested: TensorSpace,
    /// `(M ⊗_A N) ⊗_A P → M ⊗_A N ⊗_A P`.
    pub from_left: Mat,
    /// `M ⊗_A (N ⊗_A P) → M ⊗_A N ⊗_A P`.
    pub from_right: Mat,
}

pub fn assoc_normalizer(m: &RightModule, n: &Bimodule, p: &LeftModule) -> Result<AssocNormalizer> {
    if m.alg != n.left || n.right != p.alg {
        return Err(Error::MiddleMismatch);
    }
    let field = m.field();
    let (a, b) = (n.left.dim(), n.right.dim());
    let single = TensorSpace::new(
        field,
        &[m.dim, n.dim, p.dim],
        &[
            Some(Junction::new(a, &m.act, &n.lact)),
            Some(Junction::new(b, &n.ract, &p.act)),
        ],
    )?;

    let inner_left = TensorSpace::new(field, &[m.dim, n.dim], &[Some(Junction::new(a, &m.act, &n.lact))])?;
    let ract_mn = right_action_on_last(&inner_left, &n.ract, b);
    let left_nested = TensorSpace::new(
        field,
        &[inner_left.dim(), p.dim],
        &[Some(Junction::new(b, &ract_mn, &p.act))],
    )?;

    let inner_right = TensorSpace::new(field, &[n.dim, p.dim], &[Some(Junction::new(b, &n.ract, &p.act))])?;
    let lact_np = left_action_on_first(&inner_right, &n.lact, a);
    let right_nested = TensorSpace::new(
        field,
        &[m.dim, inner_right.dim()],
        &[Some(Junction::new(a, &m.act, &lact_np))],
    )?;

    let id_m = Mat::identity(field, m.dim);
    let id_p = Mat::identity(field, p.dim);
    let from_left = &single.project(&inner_left.section().kron(&id_p)) * &left_nested.section();
    let from_right = &single.project(&id_m.kron(&inner_right.section())) * &right_nested.section();
    if from_left.inverse().is_none() || from_right.inverse().is_none() {
        return Err(Error::NotWellDefined {
            context: "associativity normalizer",
        });
    }
    // (m ⊗ n) ⊗ p ↦ m ⊗ (n ⊗ p) computed directly must agree with the normalizers.
    let obvious = &right_nested.project(
        &(&id_m.kron(inner_right.projection()) * &inner_left.section().kron(&id_p)),
    ) * &left_nested.section();
    if &from_right * &obvious != from_left {
        return Err(Error::NotWellDefined {
            context: "associativity triangle",
        });
    }
    Ok(AssocNormalizer {
        single,
        inner_left,
        left_nested,
        inner_right,
        right_nested,
        from_left,
        from_right,
    })
}

/// Basis (rows, echelon form, in `M ⊗_A N` coordinates) of the cotensor
/// product `M □_C N = ker(ρ^M ⊗ N − M ⊗ λ^N)`.
pub fn cotensor(m: &Comodule, n: &LeftComodule) -> Result<(TensorSpace, Mat)> {
    if m.coring != n.coring {
        return Err(Error::MiddleMismatch);
    }
    let c = &m.coring;
    let field = c.field();
    let da = c.alg.dim();
    let mn = TensorSpace::new(field, &[m.dim(), n.dim()], &[Some(Junction::new(da, &m.module.act, &n.module.act))])?;
    let mcn = TensorSpace::new(
        field,
        &[m.dim(), c.dim(), n.dim()],
        &[
            Some(Junction::new(da, &m.module.act, &c.bimod.lact)),
            Some(Junction::new(da, &c.bimod.ract, &n.module.act)),
        ],
    )?;
    let id_m = Mat::identity(field, m.dim());
    let id_n = Mat::identity(field, n.dim());
    let diff = &m.rho.kron(&id_n) - &id_m.kron(&n.lambda);
    let on_quotient = &mcn.project(&diff) * &mn.section();
    let basis = on_quotient.kernel();
    Ok((mn, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::Algebra;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn tensor_k_is_row_major() {
        let idx = tensor_k(1, 4);
        assert_eq!((0..4).map(|j| idx(0, j)).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(tensor_k(2, 2)(1, 0), 2);
        assert_eq!(tensor_k(3, 2)(2, 1), 5);
    }

    #[test]
    fn balancing_over_the_field_is_vacuous() {
        let f = f2();
        let k = Algebra::ground(f);
        let m = RightModule::new(k.clone(), 2, Mat::identity(f, 2)).unwrap();
        let n = LeftModule::new(k, 3, Mat::identity(f, 3)).unwrap();
        let t = tensor_over(&m, &n).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.quotient().is_trivial());
    }

    #[test]
    fn d2_over_itself() {
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        let t = tensor_over(&RightModule::regular(&d2), &LeftModule::regular(&d2)).unwrap();
        assert_eq!(t.ambient_dim(), 4);
        assert_eq!(t.dim(), 2);
        // μ descends through A ⊗_A A
        assert!(t.quotient().descends(d2.mult()).unwrap().is_some());
    }

    #[test]
    fn multiplication_descends_for_every_fixture() {
        let f = f2();
        for a in [Algebra::ground(f), Algebra::diagonal(f, 2), Algebra::matrix(f, 2), Algebra::upper_triangular(f)] {
            let t = tensor_over(&RightModule::regular(&a), &LeftModule::regular(&a)).unwrap();
            assert_eq!(t.dim(), a.dim());
            let k = TensorSpace::over_k(f, &[a.dim()]);
            let induced = induced_map(a.mult(), &t, &k).unwrap().unwrap();
            assert_eq!(induced.rank(), a.dim());
        }
    }

    #[test]
    fn identity_induces_identity() {
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        let t = tensor_over(&RightModule::regular(&d2), &LeftModule::regular(&d2)).unwrap();
        let id = Mat::identity(f, 4);
        assert_eq!(induced_map(&id, &t, &t).unwrap(), Some(Mat::identity(f, 2)));
    }

    #[test]
    fn swap_fails_on_asymmetric_balancing() {
        // D2 ⊗_{D2} k with D2 acting on k through the first coordinate, and
        // k ⊗_{D2} D2 with D2 acting through the second: the swap sends the
        // relation e₁ ⊗ 1 to the surviving vector 1 ⊗ e₁.
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        let first = LeftModule::new(d2.clone(), 1, Mat::from_i64(f, &[&[1, 0]])).unwrap();
        let second = RightModule::new(d2.clone(), 1, Mat::from_i64(f, &[&[0, 1]])).unwrap();
        let src = tensor_over(&RightModule::regular(&d2), &first).unwrap();
        let dst = tensor_over(&second, &LeftModule::regular(&d2)).unwrap();
        assert_eq!((src.dim(), dst.dim()), (1, 1));
        let swap = Mat::identity(f, 2);
        assert!(induced_map(&swap, &src, &dst).unwrap().is_none());
        assert!(induced_map(&swap, &src, &src).unwrap().is_some());
    }

    #[test]
    fn assoc_normalizer_over_k_is_identity() {
        let f = f2();
        let k = Algebra::ground(f);
        let m = RightModule::new(k.clone(), 2, Mat::identity(f, 2)).unwrap();
        let n = Bimodule::new(k.clone(), k.clone(), 1, Mat::identity(f, 1), Mat::identity(f, 1)).unwrap();
        let p = LeftModule::new(k, 2, Mat::identity(f, 2)).unwrap();
        let a = assoc_normalizer(&m, &n, &p).unwrap();
        assert_eq!(a.single.dim(), 4);
        assert_eq!(a.from_left, Mat::identity(f, 4));
        assert_eq!(a.from_right, Mat::identity(f, 4));
    }

    #[test]
    fn assoc_normalizer_d2() {
        let f = f2();
        let d2 = Algebra::diagonal(f, 2);
        let a = assoc_normalizer(&RightModule::regular(&d2), &Bimodule::regular(&d2), &LeftModule::regular(&d2)).unwrap();
        assert_eq!(a.single.ambient_dim(), 8);
        assert_eq!(a.single.dim(), 2);
        assert_eq!(a.left_nested.dim(), 2);
        assert_eq!(a.right_nested.dim(), 2);
    }

    #[test]
    fn iterated_build_matches_single_step_relations() {
        // Compare against one big quotient by all balancing relations at once.
        let f = f2();
        let a = Algebra::upper_triangular(f);
        let n = a.dim();
        let t = TensorSpace::new(
            f,
            &[n, n, n],
            &[Some(Junction::new(n, a.mult(), a.mult())), Some(Junction::new(n, a.mult(), a.mult()))],
        )
        .unwrap();
        let id = a.identity();
        let rel1 = &a.mult().kron(&id) - &id.kron(a.mult());
        let r1 = rel1.kron(&id);
        let r2 = id.kron(&rel1);
        let all = r1.hstack(&r2).transpose();
        let direct = QuotientSpace::new(n * n * n, &all).unwrap();
        assert_eq!(t.quotient(), &direct);
    }

    #[test]
    fn size_guard_trips() {
        let f = f2();
        assert!(TensorSpace::new(f, &[100, 100], &[None]).is_err());
    }
}
