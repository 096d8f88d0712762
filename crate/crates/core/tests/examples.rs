//! Worked examples: measurings of the standard corings and their
//! classical counterparts.

mod common;

use coringext::algmod::{endomorphism_algebra, enumerate_algebra_maps, opposite, Algebra, AlgebraMap, Bimodule};
use coringext::constructions::{entwining_coring, sweedler_coring, trivial_coring, Coalgebra, Entwining};
use coringext::coring::{check_colinear, Comodule};
use coringext::extension::{enumerate_measurings, induced_coaction, CoringExtension};
use coringext::fixtures;
use coringext::{Field, Mat};

use common::{all_vectors, brute_measurings, brute_sweedler_measurings, fp, residues};

fn f2() -> Field {
    fp(2)
}

#[test]
fn trivial_coring_measures_exactly_through_algebra_maps() {
    let f = f2();
    let pairs = [
        (fixtures::d2(f), fixtures::d2(f)),
        (fixtures::bc2(f), fixtures::d2(f)),
        (fixtures::d2(f), fixtures::bc2(f)),
        (Algebra::upper_triangular(f), fixtures::d2(f)),
        (fixtures::d2(fp(3)), fixtures::bc2(fp(3))),
    ];
    for (a, b) in pairs {
        let ms = enumerate_measurings(&trivial_coring(&a), &b).unwrap();
        let maps = enumerate_algebra_maps(&b, &a).unwrap();
        assert_eq!(ms.len(), maps.len());
    }
}

#[test]
fn sweedler_of_k_to_d2_measures_d2_eight_ways() {
    let f = f2();
    let c = fixtures::sw(f);
    let b = fixtures::d2(f);
    let ms = enumerate_measurings(&c, &b).unwrap();
    let lib: Vec<Vec<u64>> = ms.iter().map(|m| residues(&m.nu)).collect();
    assert_eq!(lib, brute_measurings(&c, &b, 2));
    assert_eq!(ms.len(), 8);
}

/// Right `B`-actions on `A` commuting with the left action through `ι`.
fn count_bimodule_structures(iota: &AlgebraMap) -> usize {
    let (a, b) = (&iota.target, &iota.source);
    let f = a.field();
    let lact = a.mult() * &iota.matrix.kron(&a.identity());
    all_vectors(2, a.dim() * a.dim() * b.dim())
        .filter(|v| {
            let data = v.iter().map(|&x| f.from_i64(x as i64)).collect();
            let ract = Mat::new(f, a.dim(), a.dim() * b.dim(), data);
            Bimodule::new(b.clone(), b.clone(), a.dim(), lact.clone(), ract).is_ok()
        })
        .count()
}

#[test]
fn sweedler_measurings_are_bimodule_structures() {
    let f = f2();
    let d2 = fixtures::d2(f);
    let iota = AlgebraMap::identity(&d2);
    let ms = enumerate_measurings(&sweedler_coring(&iota).unwrap(), &d2).unwrap();
    assert_eq!(ms.len(), count_bimodule_structures(&iota));
    assert_eq!(ms.len(), 4);
}

#[test]
fn sweedler_measurings_are_anti_algebra_maps_into_endomorphisms() {
    let f = f2();
    let d2 = fixtures::d2(f);
    let d3 = Algebra::diagonal(f, 3);
    let iota = AlgebraMap::new(d2.clone(), d3.clone(), Mat::from_i64(f, &[&[1, 0], &[1, 0], &[0, 1]])).unwrap();
    let c = sweedler_coring(&iota).unwrap();
    assert_eq!(c.dim(), 5);
    let lact = d3.mult() * &iota.matrix.kron(&d3.identity());
    let (end, _) = endomorphism_algebra(&d2, d3.dim(), &lact).unwrap();
    let anti = enumerate_algebra_maps(&d2, &opposite(&end)).unwrap();
    assert_eq!(enumerate_measurings(&c, &d2).unwrap().len(), anti.len());
}

/// The coalgebra dual to upper triangular 2×2 matrices:
/// `Δ(x_ij) = Σ_k x_ik ⊗ x_kj` on the basis `x11, x12, x22`.
fn triangular_coalgebra(field: Field) -> Coalgebra {
    let idx = |i: usize, j: usize| match (i, j) {
        (0, 0) => 0,
        (0, 1) => 1,
        _ => 2,
    };
    let mut delta = Mat::zeros(field, 9, 3);
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        for k in i..=j {
            delta.set(idx(i, k) * 3 + idx(k, j), idx(i, j), field.one());
        }
    }
    let eps = Mat::from_i64(field, &[&[1, 0, 1]]);
    Coalgebra::new(delta, eps).unwrap()
}

fn co_opposite(c: &Coalgebra) -> Coalgebra {
    let n = c.dim;
    let swap = Mat::from_fn(c.field, n * n, n * n, |r, col| {
        if r == (col % n) * n + col / n {
            c.field.one()
        } else {
            c.field.zero()
        }
    });
    Coalgebra::new(&swap * &c.delta, c.eps.clone()).unwrap()
}

#[test]
fn flip_entwined_measurings_are_classical_measurings_of_the_co_opposite() {
    let f = f2();
    let a = Algebra::upper_triangular(f);
    let b = fixtures::d2(f);
    let coalg = triangular_coalgebra(f);
    let c = entwining_coring(&Entwining::flip(&a, &coalg)).unwrap();
    let ms = enumerate_measurings(&c, &b).unwrap();
    // f(c ⊗ b) = ν((1 ⊗ c) ⊗ b); the unit of A is x11 + x22
    let (nc, da, db) = (coalg.dim, a.dim(), b.dim());
    let unit = residues(a.unit());
    let mut restricted: Vec<Vec<u64>> = ms
        .iter()
        .map(|m| {
            let nu = residues(&m.nu);
            let mut out = vec![0; da * nc * db];
            for r in 0..da {
                for ci in 0..nc {
                    for bi in 0..db {
                        let s: u64 = (0..da).map(|x| unit[x] * nu[r * da * nc * db + (x * nc + ci) * db + bi]).sum();
                        out[r * nc * db + ci * db + bi] = s % 2;
                    }
                }
            }
            out
        })
        .collect();
    restricted.sort();
    let cop = brute_sweedler_measurings(&co_opposite(&coalg), &a, &b, 2);
    let plain = brute_sweedler_measurings(&coalg, &a, &b, 2);
    assert_eq!(restricted, cop);
    assert_ne!(cop, plain);
}

#[test]
fn counit_extension_forgets_to_modules() {
    let f = f2();
    let sw = fixtures::sw(f);
    let d2 = fixtures::d2(f);
    let triv = trivial_coring(&d2);
    let e = coringext::extension::extension_from_coring_map(&sw.eps, &sw, &triv).unwrap();
    let m = Comodule::regular(&sw);
    let out = induced_coaction(&e, &m).unwrap();
    // over the trivial coring the coaction is m ↦ m ⊗ 1
    let expected = &Mat::identity(f, sw.dim()).kron(d2.unit());
    assert_eq!(out.space().project(expected), out.coaction());
    for a in 0..d2.dim() {
        check_colinear(&sw.left_mult(a), &out, &out).unwrap();
    }
}

#[test]
fn identity_extension_of_a_coalgebra_is_its_own_coaction() {
    let f = fp(3);
    let c = fixtures::gc2(f);
    let e = CoringExtension::identity(&c);
    assert_eq!(e.as_comodule().unwrap(), Comodule::regular(&c));
}
