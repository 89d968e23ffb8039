//! Brute-force ground truth at desk scale: finite fields, symplectic
//! groups, isotropic-subspace posets, fixed-point Euler characteristics,
//! exhaustive polynomial catalogues, and eulerian functions.

pub mod chi;
pub mod eulerian;
pub mod field;
pub mod group;
pub mod matrix;
pub mod polycat;
pub mod poset;
pub mod subspace;

pub use chi::ChiOracle;
pub use eulerian::{
    abelian_groups_of_order, abelian_invariants, all_subgroups, commuting_tuple_class_count,
    hom_count, hom_count_check, hom_count_via_subgroups, AbelianGroup,
};
pub use field::FiniteField;
pub use group::{symplectic_group_order, SymplecticGroup};
pub use matrix::{form, is_symplectic, symplectic_form, FqMatrix};
pub use polycat::{
    involution, is_irreducible, is_palindromic, poly_order, srim_minus_count_direct,
    srim_plus_count_direct, PolyCatalogue, PolyRecord,
};
pub use poset::{isotropic_poset, IsotropicPoset};
pub use subspace::Subspace;

use polycat::{poly_deg, Poly};

/// Order of the general linear group over a field of size `big_q`.
pub fn gl_order(m: u32, big_q: u128) -> u128 {
    let qm = big_q.pow(m);
    (0..m).map(|i| qm - big_q.pow(i)).product()
}

/// Order of the general unitary group over a quadratic extension of a
/// field of size `big_q`.
pub fn gu_order(m: u32, big_q: u128) -> u128 {
    let mut acc = big_q.pow(m * (m - 1) / 2);
    for i in 1..=m {
        let term = big_q.pow(i) as i128 - if i % 2 == 0 { 1 } else { -1 };
        acc *= term as u128;
    }
    acc
}

/// Centralizer order of a semisimple symplectic element predicted from
/// the shape of its characteristic polynomial: symplectic blocks at the
/// fixed linear factors, unitary blocks at the self-reciprocal factors,
/// and linear blocks at swapped factor pairs.
pub fn semisimple_centralizer_order(char_poly: &Poly, catalogue: &PolyCatalogue) -> u128 {
    let field = catalogue.field();
    let q = field.q();
    let factors = catalogue.factor(char_poly);
    let mut acc: u128 = 1;
    let mut skip: Vec<Poly> = Vec::new();
    for (f, mult) in &factors {
        if skip.contains(f) {
            continue;
        }
        let deg = poly_deg(f) as u32;
        let conjugate = involution(f, field);
        if deg == 1 && (f[0] == 1 || f[0] == field.neg(1)) {
            // x - 1 or x + 1 (they coincide in characteristic 2)
            assert!(mult % 2 == 0, "fixed linear factors have even multiplicity");
            acc *= symplectic_group_order(mult / 2, q);
        } else if conjugate == *f {
            assert!(deg % 2 == 0, "self-reciprocal factors have even degree");
            acc *= gu_order(*mult, (q as u128).pow(deg / 2));
        } else {
            let partner_mult = factors
                .iter()
                .find(|(g, _)| *g == conjugate)
                .map(|(_, m)| *m)
                .expect("swapped partner occurs");
            assert_eq!(*mult, partner_mult, "swapped factors share multiplicity");
            skip.push(conjugate);
            acc *= gl_order(*mult, (q as u128).pow(deg));
        }
    }
    acc
}

/// Every element of the group has a self-reciprocal characteristic
/// polynomial, and the distinct characteristic polynomials of semisimple
/// elements realize all `q^n` self-reciprocal monic polynomials of degree
/// `2n` at the tested sizes.
pub fn charpoly_selfreciprocal_check(group: &SymplecticGroup) -> bool {
    let field = group.field();
    let mut semisimple_polys = std::collections::HashSet::new();
    for (i, g) in group.elements().iter().enumerate() {
        let cp = g.char_poly(field);
        if !is_palindromic(&cp) {
            return false;
        }
        if group.is_semisimple(i as u32) {
            semisimple_polys.insert(cp);
        }
    }
    semisimple_polys.len() as u64 == field.q().pow(group.rank() as u32)
}

/// The factorization of every self-reciprocal monic polynomial has the
/// predicted shape: even multiplicity at `x - 1` for odd `q`, and all
/// non-self-reciprocal factors paired up by the involution.
pub fn selfreciprocal_factorization_check(catalogue: &PolyCatalogue, max_deg: u32) -> bool {
    let field = catalogue.field();
    let odd_q = field.q() % 2 == 1;
    for deg in 1..=max_deg {
        for record in catalogue.records(deg) {
            if !record.self_reciprocal {
                continue;
            }
            let factors = catalogue.factor(&record.coeffs);
            let mut seen: Vec<Poly> = Vec::new();
            for (f, mult) in &factors {
                if seen.contains(f) {
                    continue;
                }
                let conjugate = involution(f, field);
                if conjugate == *f {
                    if odd_q && poly_deg(f) == 1 && f[0] == field.neg(1) && mult % 2 != 0 {
                        // x - 1 must occur with even multiplicity
                        return false;
                    }
                    continue;
                }
                let partner = factors.iter().find(|(g, _)| *g == conjugate);
                match partner {
                    Some((_, pm)) if pm == mult => seen.push(conjugate),
                    _ => return false,
                }
            }
        }
    }
    true
}
