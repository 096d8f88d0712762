//! Named small objects used by tests and by the command-line front end.
//!
//! Reserved names: `FIX.D2` (the diagonal algebra k × k), `FIX.BC2` (the group
//! algebra of the cyclic group of order 2), `FIX.GC2` (two group-likes as a
//! coring over the field) and `FIX.SW` (the Sweedler coring of k → k × k).
//! A suffix `@F<p>` pins the field, e.g. `GC2@F3`.

use crate::algmod::{Algebra, AlgebraMap};
use crate::constructions::{group_coalgebra, sweedler_coring, trivial_coring, Coalgebra};
use crate::coring::Coring;
use crate::descent::ChainData;
use crate::error::{Error, Result};
use crate::field::Field;

pub fn d2(field: Field) -> Algebra {
    Algebra::diagonal(field, 2)
}

pub fn bc2(field: Field) -> Algebra {
    Algebra::cyclic_group(field, 2)
}

pub fn gc2_coalgebra(field: Field) -> Coalgebra {
    group_coalgebra(field, 2)
}

pub fn gc2(field: Field) -> Coring {
    gc2_coalgebra(field).to_coring()
}

pub fn sw(field: Field) -> Coring {
    sweedler_coring(&AlgebraMap::unit_map(&d2(field))).expect("Sweedler fixture")
}

/// `k → k → D2` with `ρ_A` the scalar action and `φ(a) = 1 ⊗ a ⊗ 1`.
pub fn unit_chain(field: Field) -> ChainData {
    let a = d2(field);
    let k = Algebra::ground(field);
    ChainData {
        iota_b: AlgebraMap::identity(&k),
        iota_a: AlgebraMap::unit_map(&a),
        rho_a: a.identity(),
        phi: a.unit().kron(&a.identity()),
    }
}

/// The same chain with `φ(a) = a ⊗ 1 ⊗ 1`, which violates the unit diagram.
pub fn unit_chain_left_phi(field: Field) -> ChainData {
    let a = d2(field);
    ChainData {
        phi: a.identity().kron(a.unit()),
        ..unit_chain(field)
    }
}

/// `A = B = D = D2` with every map the identity and `φ(a) = 1 ⊗ a ⊗ 1`.
pub fn collapsing_chain(field: Field) -> ChainData {
    let a = d2(field);
    let id = AlgebraMap::identity(&a);
    ChainData {
        iota_b: id.clone(),
        iota_a: id,
        rho_a: a.mult().clone(),
        phi: a.unit().kron(&a.identity()).kron(a.unit()),
    }
}

/// A fixture named in the command-line schema.
#[derive(Clone, Debug)]
pub enum Fixture {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Coring(Coring),
}

/// Resolves `FIX.X` (in `default_field`) or `X@Fp`.
pub fn lookup(name: &str, default_field: Field) -> Result<Fixture> {
    let (base, field) = match name.split_once('@') {
        Some((base, f)) => {
            let p = f
                .strip_prefix('F')
                .and_then(|s| s.parse::<u64>().ok())
                .ok_or_else(|| Error::InvalidField(f.to_string()))?;
            (base, Field::prime(p)?)
        }
        None => (name, default_field),
    };
    let base = base.strip_prefix("FIX.").unwrap_or(base);
    Ok(match base {
        "D2" => Fixture::Algebra(d2(field)),
        "BC2" => Fixture::Algebra(bc2(field)),
        "K" => Fixture::Algebra(Algebra::ground(field)),
        "GC2" => Fixture::Coring(gc2(field)),
        "SW" => Fixture::Coring(sweedler_coring(&AlgebraMap::unit_map(&d2(field)))?),
        "TRIV_D2" => Fixture::Coring(trivial_coring(&d2(field))),
        _ => return Err(Error::UnknownReference(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{assemble_chain_extension, chain_extension, check_chain};
    use crate::error::Axiom;
    use crate::extension::CoringExtension;

    #[test]
    fn unit_chain_accepts_and_left_variant_fails_at_a() {
        let f = Field::prime(2).unwrap();
        chain_extension(&unit_chain(f)).unwrap();
        let bad = unit_chain_left_phi(f);
        assert!(matches!(
            check_chain(&bad),
            Err(Error::AxiomViolation {
                axiom: Axiom::ChainA,
                ..
            })
        ));
        let (c, d, ract, sigma) = assemble_chain_extension(&bad).unwrap();
        assert!(CoringExtension::new(c, d, ract, sigma).is_err());
    }

    #[test]
    fn lookup_names() {
        let f = Field::prime(2).unwrap();
        assert!(matches!(lookup("FIX.SW", f).unwrap(), Fixture::Coring(c) if c.dim() == 4));
        assert!(matches!(lookup("GC2@F3", f).unwrap(), Fixture::Coring(c) if c.field() == Field::prime(3).unwrap()));
        assert!(lookup("GC2@F4", f).is_err());
    }
}
