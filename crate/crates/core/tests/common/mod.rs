//! Independent oracles: plain residue arithmetic over 𝔽_p on raw structure
//! constants, with no use of the library's linear algebra.

#![allow(dead_code)]

use coringext::algmod::Algebra;
use coringext::constructions::Coalgebra;
use coringext::coring::Coring;
use coringext::{Field, Mat, Scalar};

pub fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// Row-major residues of a matrix over 𝔽_p.
pub fn residues(m: &Mat) -> Vec<u64> {
    m.data()
        .iter()
        .map(|s| match s {
            Scalar::Fp { value, .. } => *value,
            Scalar::Q(_) => panic!("oracle works over prime fields"),
        })
        .collect()
}

/// A dense residue matrix with the library's column convention.
#[derive(Clone)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Dense {
    pub fn of(m: &Mat) -> Dense {
        Dense {
            rows: m.rows(),
            cols: m.cols(),
            data: residues(m),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.at(r, c)).collect()
    }
}

/// Every vector of `𝔽_p^len`, in lexicographic order.
pub fn all_vectors(p: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = idx % p;
            idx /= p;
        }
        v
    })
}

fn axpy(p: u64, acc: &mut [u64], s: u64, v: &[u64]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = (*a + s * x) % p;
    }
}

/// The bilinear map of `table` on coordinate vectors `a` and `x`.
fn act(p: u64, table: &Dense, right_dim: usize, a: &[u64], x: &[u64], out_dim: usize) -> Vec<u64> {
    let mut out = vec![0; out_dim];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &xj) in x.iter().enumerate() {
            if ai * xj % p != 0 {
                axpy(p, &mut out, ai * xj % p, &table.col(i * right_dim + j));
            }
        }
    }
    out
}

/// All measurings `ν: C ⊗ B → A` by exhaustion over every linear map,
/// as row-major residues.
pub fn brute_measurings(c: &Coring, b: &Algebra, p: u64) -> Vec<Vec<u64>> {
    let (n, da, db) = (c.dim(), c.alg.dim(), b.dim());
    let lact = Dense::of(&c.bimod.lact);
    let ract = Dense::of(&c.bimod.ract);
    let delta = Dense::of(&c.delta);
    let eps = Dense::of(&c.eps);
    let amult = Dense::of(c.alg.mult());
    let bmult = Dense::of(b.mult());
    let bunit = residues(b.unit());
    let cols = n * db;
    let mut found = Vec::new();
    for data in all_vectors(p, da * cols) {
        let nu = Dense { rows: da, cols, data };
        let nu_of = |x: &[u64], bi: usize| -> Vec<u64> {
            let mut out = vec![0; da];
            for (m, &xm) in x.iter().enumerate() {
                if xm != 0 {
                    axpy(p, &mut out, xm, &nu.col(m * db + bi));
                }
            }
            out
        };
        let unit_ok = (0..n).all(|ci| {
            let mut v = vec![0; da];
            for (bi, &u) in bunit.iter().enumerate() {
                axpy(p, &mut v, u, &nu.col(ci * db + bi));
            }
            v == eps.col(ci)
        });
        if !unit_ok {
            continue;
        }
        let linear = (0..da).all(|a| {
            (0..n).all(|ci| {
                (0..db).all(|bi| {
                    let ac = lact.col(a * n + ci);
                    let lhs = nu_of(&ac, bi);
                    let mut ea = vec![0; da];
                    ea[a] = 1;
                    let rhs = act(p, &amult, da, &ea, &nu.col(ci * db + bi), da);
                    lhs == rhs
                })
            })
        });
        if !linear {
            continue;
        }
        let mult = (0..n).all(|ci| {
            (0..db).all(|b1| {
                (0..db).all(|b2| {
                    let mut lhs = vec![0; da];
                    for (l, &coef) in bmult.col(b1 * db + b2).iter().enumerate() {
                        axpy(p, &mut lhs, coef, &nu.col(ci * db + l));
                    }
                    let mut rhs = vec![0; da];
                    for i in 0..n {
                        for j in 0..n {
                            let coeff = delta.at(i * n + j, ci);
                            if coeff == 0 {
                                continue;
                            }
                            let v = nu.col(j * db + b1);
                            let mut iv = vec![0; n];
                            for (x, &vx) in v.iter().enumerate() {
                                axpy(p, &mut iv, vx, &ract.col(i * da + x));
                            }
                            axpy(p, &mut rhs, coeff, &nu_of(&iv, b2));
                        }
                    }
                    lhs == rhs
                })
            })
        });
        if mult {
            found.push(nu.data.clone());
        }
    }
    found.sort();
    found
}

/// All unital multiplicative linear maps `B → S`, as row-major residues.
pub fn brute_algebra_maps(b: &Algebra, s: &Algebra, p: u64) -> Vec<Vec<u64>> {
    let (db, ds) = (b.dim(), s.dim());
    let bmult = Dense::of(b.mult());
    let smult = Dense::of(s.mult());
    let bunit = residues(b.unit());
    let sunit = residues(s.unit());
    let mut found = Vec::new();
    for data in all_vectors(p, ds * db) {
        let chi = Dense { rows: ds, cols: db, data };
        let apply = |x: &[u64]| {
            let mut out = vec![0; ds];
            for (i, &xi) in x.iter().enumerate() {
                axpy(p, &mut out, xi, &chi.col(i));
            }
            out
        };
        if apply(&bunit) != sunit {
            continue;
        }
        let ok = (0..db).all(|i| {
            (0..db).all(|j| apply(&bmult.col(i * db + j)) == act(p, &smult, ds, &chi.col(i), &chi.col(j), ds))
        });
        if ok {
            found.push(chi.data.clone());
        }
    }
    found.sort();
    found
}

/// Classical measurings `ν: C ⊗ B → A` of a coalgebra:
/// `ν(c ⊗ 1) = ε(c)1` and `ν(c ⊗ bb') = Σ ν(c₍₁₎ ⊗ b)ν(c₍₂₎ ⊗ b')`.
pub fn brute_sweedler_measurings(c: &Coalgebra, a: &Algebra, b: &Algebra, p: u64) -> Vec<Vec<u64>> {
    let (n, da, db) = (c.dim, a.dim(), b.dim());
    let delta = Dense::of(&c.delta);
    let eps = residues(&c.eps);
    let amult = Dense::of(a.mult());
    let aunit = residues(a.unit());
    let bmult = Dense::of(b.mult());
    let bunit = residues(b.unit());
    let mut found = Vec::new();
    for data in all_vectors(p, da * n * db) {
        let nu = Dense { rows: da, cols: n * db, data };
        let unit_ok = (0..n).all(|ci| {
            let mut v = vec![0; da];
            for (bi, &u) in bunit.iter().enumerate() {
                axpy(p, &mut v, u, &nu.col(ci * db + bi));
            }
            v == aunit.iter().map(|x| x * eps[ci] % p).collect::<Vec<_>>()
        });
        if !unit_ok {
            continue;
        }
        let ok = (0..n).all(|ci| {
            (0..db).all(|b1| {
                (0..db).all(|b2| {
                    let mut lhs = vec![0; da];
                    for (l, &coef) in bmult.col(b1 * db + b2).iter().enumerate() {
                        axpy(p, &mut lhs, coef, &nu.col(ci * db + l));
                    }
                    let mut rhs = vec![0; da];
                    for i in 0..n {
                        for j in 0..n {
                            let coeff = delta.at(i * n + j, ci);
                            if coeff != 0 {
                                let prod = act(p, &amult, da, &nu.col(i * db + b1), &nu.col(j * db + b2), da);
                                axpy(p, &mut rhs, coeff, &prod);
                            }
                        }
                    }
                    lhs == rhs
                })
            })
        });
        if ok {
            found.push(nu.data.clone());
        }
    }
    found.sort();
    found
}

/// Rank over 𝔽_p by counting kernel vectors: `p^(cols − rank)` solutions.
pub fn rank_by_counting(m: &Mat, p: u64) -> usize {
    let d = Dense::of(m);
    let kernel = all_vectors(p, d.cols)
        .filter(|v| (0..d.rows).all(|r| (0..d.cols).map(|c| d.at(r, c) * v[c]).sum::<u64>() % p == 0))
        .count() as u64;
    let mut nullity = 0;
    let mut k = kernel;
    while k > 1 {
        k /= p;
        nullity += 1;
    }
    d.cols - nullity
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank_bareiss(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..c {
        let Some(piv) = (rank..r).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..r {
            for j in col + 1..c {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}
