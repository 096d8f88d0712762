//! Finite-dimensional algebras, algebra maps and bimodules given by
//! structure constants.
//!
//! Multiplication is stored as a map `A ⊗ A → A`: column `i·n + j` of
//! [`Algebra::mult`] holds the coordinates of `e_i·e_j`. Actions follow the
//! same convention: a left action `L ⊗ M → M` is indexed `(a, m) ↦ a·dim M + m`,
//! a right action `M ⊗ R → M` is indexed `(m, b) ↦ m·dim R + b`.

use crate::error::{Axiom, Error, Result};
use crate::exactla::{unravel, Mat};
use crate::field::{Field, Scalar};
use crate::limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Mat,
    unit: Mat,
}

impl Algebra {
    /// Validates associativity and unitality on every basis tuple.
    pub fn new(mult: Mat, unit: Mat) -> Result<Algebra> {
        let field = mult.field();
        let dim = mult.rows();
        if mult.cols() != dim * dim {
            return Err(Error::DimensionMismatch {
                context: "algebra multiplication",
                expected: dim * dim,
                found: mult.cols(),
            });
        }
        if unit.shape() != (dim, 1) {
            return Err(Error::DimensionMismatch {
                context: "algebra unit",
                expected: dim,
                found: unit.rows(),
            });
        }
        let id = Mat::identity(field, dim);
        let left = &mult * &mult.kron(&id);
        let right = &mult * &id.kron(&mult);
        if let Some(c) = left.first_diff_col(&right) {
            return Err(Error::violation(Axiom::Associativity, unravel(c, &[dim; 3])));
        }
        for side in [&mult * &unit.kron(&id), &mult * &id.kron(&unit)] {
            if let Some(c) = side.first_diff_col(&id) {
                return Err(Error::violation(Axiom::Unitality, vec![c]));
            }
        }
        Ok(Algebra {
            field,
            dim,
            mult,
            unit,
        })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra {
            field,
            dim: 1,
            mult: Mat::identity(field, 1),
            unit: Mat::identity(field, 1),
        }
    }

    /// `k^n` with componentwise product.
    pub fn diagonal(field: Field, n: usize) -> Algebra {
        let mult = Mat::from_fn(field, n, n * n, |l, c| {
            let (i, j) = (c / n, c % n);
            if i == j && j == l {
                field.one()
            } else {
                field.zero()
            }
        });
        let unit = Mat::from_fn(field, n, 1, |_, _| field.one());
        Algebra::new(mult, unit).expect("k^n is an algebra")
    }

    /// The group algebra `k[C_n]` on basis `1, g, …, g^{n-1}`.
    pub fn cyclic_group(field: Field, n: usize) -> Algebra {
        let mult = Mat::from_fn(field, n, n * n, |l, c| {
            if (c / n + c % n) % n == l {
                field.one()
            } else {
                field.zero()
            }
        });
        Algebra::new(mult, Mat::unit_column(field, n, 0)).expect("group algebra")
    }

    /// `n × n` matrices on the basis `E_{rc}` (index `r·n + c`).
    pub fn matrix(field: Field, n: usize) -> Algebra {
        let d = n * n;
        let mult = Mat::from_fn(field, d, d * d, |l, c| {
            let (x, y) = (c / d, c % d);
            let (xr, xc, yr, yc) = (x / n, x % n, y / n, y % n);
            if xc == yr && l == xr * n + yc {
                field.one()
            } else {
                field.zero()
            }
        });
        let unit = Mat::from_fn(field, d, 1, |i, _| {
            if i / n == i % n {
                field.one()
            } else {
                field.zero()
            }
        });
        Algebra::new(mult, unit).expect("matrix algebra")
    }

    /// Upper-triangular 2×2 matrices on the basis `E11, E12, E22`.
    pub fn upper_triangular(field: Field) -> Algebra {
        let positions = [(0usize, 0usize), (0, 1), (1, 1)];
        let mult = Mat::from_fn(field, 3, 9, |l, c| {
            let (x, y) = (positions[c / 3], positions[c % 3]);
            if x.1 == y.0 && positions[l] == (x.0, y.1) {
                field.one()
            } else {
                field.zero()
            }
        });
        let unit = Mat::from_i64(field, &[&[1], &[0], &[1]]);
        Algebra::new(mult, unit).expect("upper triangular algebra")
    }

    /// Builds an algebra on a basis of matrices closed under `product`,
    /// reading structure constants off by solving for coordinates.
    pub fn from_basis(
        field: Field,
        basis: &[Mat],
        unit: &Mat,
        product: impl Fn(&Mat, &Mat) -> Mat,
    ) -> Result<Algebra> {
        let n = basis.len();
        let coords = Coordinates::new(field, basis);
        let mut mult = Mat::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let c = coords
                    .of(&product(&basis[i], &basis[j]))
                    .ok_or(Error::NotInSubspace { context: "basis product" })?;
                for (l, v) in c.into_iter().enumerate() {
                    mult.set(l, i * n + j, v);
                }
            }
        }
        let u = coords
            .of(unit)
            .ok_or(Error::NotInSubspace { context: "unit" })?;
        Algebra::new(mult, Mat::column(field, u))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `A ⊗ A → A`.
    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    /// `k → A` as a `dim × 1` column.
    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.field, self.dim)
    }

    /// Structure constant `m[i][j][l]`.
    pub fn structure_constant(&self, i: usize, j: usize, l: usize) -> &Scalar {
        self.mult.get(l, i * self.dim + j)
    }

    /// Product of two coordinate vectors.
    pub fn product(&self, x: &Mat, y: &Mat) -> Mat {
        &self.mult * &x.kron(y)
    }

    /// The multiplication tensor as nested `m[i][j][l]`.
    pub fn tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|l| self.structure_constant(i, j, l).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        opposite(self).mult == self.mult
    }
}

/// Checks shapes and axioms of an algebra given as `m[i][j][l]` plus unit.
pub fn make_algebra(field: Field, dim: usize, mult: &[Vec<Vec<Scalar>>], unit: &[Scalar]) -> Result<Algebra> {
    if mult.len() != dim || mult.iter().any(|m| m.len() != dim || m.iter().any(|v| v.len() != dim)) {
        return Err(Error::DimensionMismatch {
            context: "multiplication tensor",
            expected: dim,
            found: mult.len(),
        });
    }
    if unit.len() != dim {
        return Err(Error::DimensionMismatch {
            context: "unit vector",
            expected: dim,
            found: unit.len(),
        });
    }
    let m = Mat::from_fn(field, dim, dim * dim, |l, c| mult[c / dim][c % dim][l].clone());
    Algebra::new(m, Mat::column(field, unit.to_vec()))
}

/// `A^op`: structure constants with the two input slots swapped.
pub fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim;
    let mult = Mat::from_fn(a.field, n, n * n, |l, c| a.mult.get(l, (c % n) * n + c / n).clone());
    Algebra {
        field: a.field,
        dim: n,
        mult,
        unit: a.unit.clone(),
    }
}

/// Coordinates relative to a linearly independent family of matrices.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: Field,
    basis: Mat,
}

impl Coordinates {
    pub fn new(field: Field, basis: &[Mat]) -> Coordinates {
        let len = basis.first().map_or(0, |b| b.rows() * b.cols());
        let cols: Vec<Vec<Scalar>> = basis.iter().map(Mat::vectorize).collect();
        let basis = Mat::from_rows(field, len, cols).transpose();
        Coordinates { field, basis }
    }

    /// Coordinates of `x`, or `None` if `x` lies outside the span.
    pub fn of(&self, x: &Mat) -> Option<Vec<Scalar>> {
        if self.basis.cols() == 0 {
            return if x.is_zero() { Some(Vec::new()) } else { None };
        }
        self.basis.solve(&x.vectorize()).ok().flatten()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Basis of the space of `rows × cols` matrices `X` with `constraint(X) = 0`,
/// for a linear `constraint`. Basis order follows the echelon kernel basis.
pub fn hom_space(field: Field, rows: usize, cols: usize, constraint: impl Fn(&Mat) -> Mat) -> Vec<Mat> {
    let n = rows * cols;
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|idx| {
            let mut e = Mat::zeros(field, rows, cols);
            e.set(idx / cols.max(1), idx % cols.max(1), field.one());
            constraint(&e).vectorize()
        })
        .collect();
    let len = images.first().map_or(0, Vec::len);
    let system = Mat::from_rows(field, len, images).transpose();
    let system = if len == 0 { Mat::zeros(field, 0, n) } else { system };
    let k = system.kernel();
    (0..k.rows())
        .map(|i| Mat::new(field, rows, cols, k.row(i).to_vec()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraMap {
    pub source: Algebra,
    pub target: Algebra,
    pub matrix: Mat,
}

impl AlgebraMap {
    /// Validated map `source → target`.
    pub fn new(source: Algebra, target: Algebra, matrix: Mat) -> Result<AlgebraMap> {
        let f = AlgebraMap {
            source,
            target,
            matrix,
        };
        check_algebra_map(&f)?;
        Ok(f)
    }

    pub fn identity(a: &Algebra) -> AlgebraMap {
        AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            matrix: a.identity(),
        }
    }

    /// The unit map `k → A`.
    pub fn unit_map(a: &Algebra) -> AlgebraMap {
        AlgebraMap {
            source: Algebra::ground(a.field()),
            target: a.clone(),
            matrix: a.unit().clone(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AlgebraMap) -> Result<AlgebraMap> {
        if first.target != self.source {
            return Err(Error::MiddleMismatch);
        }
        Ok(AlgebraMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &first.matrix,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.matrix.inverse().is_some()
    }
}

/// Accepts iff the matrix is unital and multiplicative on all basis pairs.
pub fn check_algebra_map(f: &AlgebraMap) -> Result<()> {
    let (b, a) = (&f.source, &f.target);
    if f.matrix.shape() != (a.dim, b.dim) {
        return Err(Error::DimensionMismatch {
            context: "algebra map matrix",
            expected: a.dim * b.dim,
            found: f.matrix.rows() * f.matrix.cols(),
        });
    }
    if &f.matrix * &b.unit != a.unit {
        return Err(Error::violation(Axiom::UnitPreserving, vec![]));
    }
    let lhs = &f.matrix * &b.mult;
    let rhs = &a.mult * &f.matrix.kron(&f.matrix);
    if let Some(c) = lhs.first_diff_col(&rhs) {
        return Err(Error::violation(Axiom::Multiplicative, unravel(c, &[b.dim, b.dim])));
    }
    Ok(())
}

/// Every algebra map `b → a`, by exhaustive sweep over all `p^(dim a·dim b)`
/// matrices, in lexicographic order of their row-major entries.
pub fn enumerate_algebra_maps(b: &Algebra, a: &Algebra) -> Result<Vec<AlgebraMap>> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let p = a.field.characteristic().ok_or(Error::NonFiniteField)?;
    let (da, db) = (a.dim, b.dim);
    let n = da * db;
    limits::guard_enum(p, n)?;

    // Plain residues keep the inner loop allocation-free.
    let res = |s: &Scalar| match s {
        Scalar::Fp { value, .. } => *value,
        Scalar::Q(_) => unreachable!(),
    };
    let unit_b: Vec<u64> = b.unit.vectorize().iter().map(res).collect();
    let unit_a: Vec<u64> = a.unit.vectorize().iter().map(res).collect();
    let mb: Vec<u64> = b.mult.vectorize().iter().map(res).collect();
    let ma: Vec<u64> = a.mult.vectorize().iter().map(res).collect();
    let entry = |f: &[u64], r: usize, c: usize| f[r * db + c];

    let mut found = Vec::new();
    let mut f = vec![0u64; n];
    'sweep: loop {
        let unital = (0..da).all(|r| (0..db).map(|c| entry(&f, r, c) * unit_b[c]).sum::<u64>() % p == unit_a[r]);
        if unital && is_multiplicative(&f, da, db, &ma, &mb, p) {
            let field = a.field;
            let m = Mat::new(field, da, db, f.iter().map(|&v| field.from_i64(v as i64)).collect());
            found.push(AlgebraMap {
                source: b.clone(),
                target: a.clone(),
                matrix: m,
            });
        }
        // odometer, last entry fastest: lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                break 'sweep;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
        }
    }
    Ok(found)
}

fn is_multiplicative(f: &[u64], da: usize, db: usize, ma: &[u64], mb: &[u64], p: u64) -> bool {
    // ma is da × da², mb is db × db², both row-major.
    for i in 0..db {
        for j in 0..db {
            for r in 0..da {
                let lhs: u64 = (0..db).map(|l| f[r * db + l] * mb[l * db * db + i * db + j] % p).sum::<u64>() % p;
                let mut rhs = 0u64;
                for s in 0..da {
                    let x = f[s * db + i];
                    if x == 0 {
                        continue;
                    }
                    for t in 0..da {
                        let y = f[t * db + j];
                        if y != 0 {
                            rhs = (rhs + x * y % p * ma[r * da * da + s * da + t]) % p;
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Left-unital, left-associative check for `L ⊗ M → M`.
fn check_left_action(alg: &Algebra, dim: usize, lact: &Mat) -> Result<()> {
    let id = Mat::identity(alg.field, dim);
    if let Some(c) = (lact * &alg.unit.kron(&id)).first_diff_col(&id) {
        return Err(Error::violation(Axiom::LeftUnital, vec![c]));
    }
    let lhs = lact * &alg.mult.kron(&id);
    let rhs = lact * &alg.identity().kron(lact);
    if let Some(c) = lhs.first_diff_col(&rhs) {
        return Err(Error::violation(Axiom::LeftAssoc, unravel(c, &[alg.dim, alg.dim, dim])));
    }
    Ok(())
}

/// Right-unital, right-associative check for `M ⊗ R → M`.
pub fn check_right_action(alg: &Algebra, dim: usize, ract: &Mat) -> Result<()> {
    if ract.shape() != (dim, dim * alg.dim) {
        return Err(Error::DimensionMismatch {
            context: "right action",
            expected: dim * alg.dim,
            found: ract.cols(),
        });
    }
    let id = Mat::identity(alg.field, dim);
    if let Some(c) = (ract * &id.kron(&alg.unit)).first_diff_col(&id) {
        return Err(Error::violation(Axiom::RightUnital, vec![c]));
    }
    let lhs = ract * &ract.kron(&alg.identity());
    let rhs = ract * &id.kron(&alg.mult);
    if let Some(c) = lhs.first_diff_col(&rhs) {
        return Err(Error::violation(Axiom::RightAssoc, unravel(c, &[dim, alg.dim, alg.dim])));
    }
    Ok(())
}

/// A right module `M ⊗ A → M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightModule {
    pub alg: Algebra,
    pub dim: usize,
    pub act: Mat,
}

impl RightModule {
    pub fn new(alg: Algebra, dim: usize, act: Mat) -> Result<RightModule> {
        check_right_action(&alg, dim, &act)?;
        Ok(RightModule { alg, dim, act })
    }

    pub fn regular(alg: &Algebra) -> RightModule {
        RightModule {
            alg: alg.clone(),
            dim: alg.dim,
            act: alg.mult.clone(),
        }
    }

    pub fn zero(alg: &Algebra) -> RightModule {
        RightModule {
            alg: alg.clone(),
            dim: 0,
            act: Mat::zeros(alg.field, 0, 0),
        }
    }

    pub fn direct_sum(&self, other: &RightModule) -> RightModule {
        let act = block_action_right(&self.act, self.dim, &other.act, other.dim, self.alg.dim);
        RightModule {
            alg: self.alg.clone(),
            dim: self.dim + other.dim,
            act,
        }
    }

    /// Restriction of scalars along `f: B → A`.
    pub fn restrict(&self, f: &AlgebraMap) -> RightModule {
        RightModule {
            alg: f.source.clone(),
            dim: self.dim,
            act: &self.act * &Mat::identity(self.alg.field, self.dim).kron(&f.matrix),
        }
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }
}

fn block_action_right(a: &Mat, da: usize, b: &Mat, db: usize, dalg: usize) -> Mat {
    let field = a.field();
    let d = da + db;
    let mut act = Mat::zeros(field, d, d * dalg);
    for m in 0..d {
        for x in 0..dalg {
            for l in 0..d {
                let v = match (m < da, l < da) {
                    (true, true) => a.get(l, m * dalg + x).clone(),
                    (false, false) => b.get(l - da, (m - da) * dalg + x).clone(),
                    _ => continue,
                };
                act.set(l, m * dalg + x, v);
            }
        }
    }
    act
}

/// A left module `A ⊗ M → M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftModule {
    pub alg: Algebra,
    pub dim: usize,
    pub act: Mat,
}

impl LeftModule {
    pub fn new(alg: Algebra, dim: usize, act: Mat) -> Result<LeftModule> {
        if act.shape() != (dim, alg.dim * dim) {
            return Err(Error::DimensionMismatch {
                context: "left action",
                expected: alg.dim * dim,
                found: act.cols(),
            });
        }
        check_left_action(&alg, dim, &act)?;
        Ok(LeftModule { alg, dim, act })
    }

    pub fn regular(alg: &Algebra) -> LeftModule {
        LeftModule {
            alg: alg.clone(),
            dim: alg.dim,
            act: alg.mult.clone(),
        }
    }

    /// Restriction of scalars along `f: B → A`.
    pub fn restrict(&self, f: &AlgebraMap) -> LeftModule {
        LeftModule {
            alg: f.source.clone(),
            dim: self.dim,
            act: &self.act * &f.matrix.kron(&Mat::identity(self.alg.field, self.dim)),
        }
    }
}

/// An `(L, R)`-bimodule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bimodule {
    pub left: Algebra,
    pub right: Algebra,
    pub dim: usize,
    pub lact: Mat,
    pub ract: Mat,
}

impl Bimodule {
    /// Shape checks plus the five bimodule identities, in the order
    /// unitality, commuting actions, left and right associativity.
    pub fn new(left: Algebra, right: Algebra, dim: usize, lact: Mat, ract: Mat) -> Result<Bimodule> {
        if lact.shape() != (dim, left.dim * dim) {
            return Err(Error::DimensionMismatch {
                context: "left action",
                expected: left.dim * dim,
                found: lact.cols(),
            });
        }
        if ract.shape() != (dim, dim * right.dim) {
            return Err(Error::DimensionMismatch {
                context: "right action",
                expected: dim * right.dim,
                found: ract.cols(),
            });
        }
        let field = left.field;
        if right.field != field || lact.field() != field || ract.field() != field {
            return Err(Error::FieldMismatch);
        }
        let id = Mat::identity(field, dim);
        if let Some(c) = (&lact * &left.unit.kron(&id)).first_diff_col(&id) {
            return Err(Error::violation(Axiom::LeftUnital, vec![c]));
        }
        if let Some(c) = (&ract * &id.kron(&right.unit)).first_diff_col(&id) {
            return Err(Error::violation(Axiom::RightUnital, vec![c]));
        }
        let lr = &ract * &lact.kron(&right.identity());
        let rl = &lact * &left.identity().kron(&ract);
        if let Some(c) = lr.first_diff_col(&rl) {
            return Err(Error::violation(
                Axiom::CommutingActions,
                unravel(c, &[left.dim, dim, right.dim]),
            ));
        }
        check_left_action(&left, dim, &lact)?;
        check_right_action(&right, dim, &ract)?;
        Ok(Bimodule {
            left,
            right,
            dim,
            lact,
            ract,
        })
    }

    /// `A` over itself on both sides.
    pub fn regular(a: &Algebra) -> Bimodule {
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            dim: a.dim,
            lact: a.mult.clone(),
            ract: a.mult.clone(),
        }
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            alg: self.left.clone(),
            dim: self.dim,
            act: self.lact.clone(),
        }
    }

    pub fn right_module(&self) -> RightModule {
        RightModule {
            alg: self.right.clone(),
            dim: self.dim,
            act: self.ract.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.left.field
    }
}

/// Validated bimodule from its two actions.
pub fn make_bimodule(left: &Algebra, right: &Algebra, lact: Mat, ract: Mat) -> Result<Bimodule> {
    let dim = lact.rows();
    Bimodule::new(left.clone(), right.clone(), dim, lact, ract)
}

/// Left `B`-linear endomorphisms of a left module, with product `fg = f∘g`.
/// Returns the algebra and the matrices of its basis elements.
pub fn endomorphism_algebra(alg: &Algebra, dim: usize, lact: &Mat) -> Result<(Algebra, Vec<Mat>)> {
    let field = alg.field;
    let basis = hom_space(field, dim, dim, |g| {
        // g(b·s) − b·g(s)
        &(g * lact) - &(lact * &alg.identity().kron(g))
    });
    let end = Algebra::from_basis(field, &basis, &Mat::identity(field, dim), |f, g| f * g)?;
    Ok((end, basis))
}
