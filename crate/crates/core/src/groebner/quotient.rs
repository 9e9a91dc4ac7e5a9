//! Intersection, ideal quotient and saturation by elimination.

use super::ideal::Ideal;
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial};

/// Upper bound on quotient rounds in [`saturate`]; Noetherianity makes it unreachable in practice.
const MAX_SATURATION_ROUNDS: usize = 64;

fn sample_one<F: Field>(polys: &[&Polynomial<F>]) -> Option<F> {
    polys
        .iter()
        .find_map(|p| p.leading_coeff())
        .map(|c| c.one_like())
}

/// `I ∩ J` via `t·I + (1 - t)·J`, eliminating `t`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Ideal<F> {
    let n = i.nvars();
    assert_eq!(n, j.nvars());
    if i.is_zero() || j.is_zero() {
        return Ideal::zero(n);
    }
    let all: Vec<&Polynomial<F>> = i.generators().iter().chain(j.generators()).collect();
    let one = sample_one(&all).expect("nonzero generators");
    let order = MonomialOrder::Block { split: 1 };
    let t = Polynomial::monomial(Monomial::var(n + 1, 0), one.clone(), order);
    let one_minus_t = Polynomial::constant(one, n + 1, order).sub(&t);
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(g.insert_vars(0, 1, order).mul(&t));
    }
    for g in j.generators() {
        gens.push(g.insert_vars(0, 1, order).mul(&one_minus_t));
    }
    let lifted = Ideal::new(n + 1, gens);
    let gb = lifted.groebner_basis(order);
    let kept = gb
        .iter()
        .filter_map(|g| g.drop_unused_var(0))
        .map(|g| g.with_order(MonomialOrder::GrevLex))
        .collect();
    Ideal::new(n, kept)
}

/// `J : f = (J ∩ (f)) / f`.
pub fn quotient_by<F: Field>(j: &Ideal<F>, f: &Polynomial<F>) -> Ideal<F> {
    let n = j.nvars();
    if f.is_zero() || j.contains(f) {
        let one = f
            .leading_coeff()
            .or_else(|| j.generators().first().and_then(|g| g.leading_coeff()))
            .map(|c| c.one_like());
        return match one {
            Some(one) => Ideal::new(n, vec![Polynomial::constant(one, n, MonomialOrder::GrevLex)]),
            // J = 0 and f = 0: the whole ring, but no field element is at hand to write 1
            None => Ideal::zero(n),
        };
    }
    if j.is_zero() {
        return Ideal::zero(n);
    }
    let f = f.with_order(MonomialOrder::GrevLex);
    let principal = Ideal::new(n, vec![f.clone()]);
    let meet = intersect(j, &principal);
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.exact_div(&f).expect("elements of J ∩ (f) are multiples of f"))
        .collect();
    Ideal::new(n, gens)
}

/// `J : I`, the intersection of `J : f` over the generators `f` of `I`.
pub fn quotient<F: Field>(j: &Ideal<F>, i: &Ideal<F>) -> Ideal<F> {
    let n = j.nvars();
    assert_eq!(n, i.nvars());
    let mut parts = i.generators().iter().map(|f| quotient_by(j, f));
    let Some(first) = parts.next() else {
        // J : 0 is the whole ring
        return quotient_by(j, &Polynomial::zero(n, MonomialOrder::GrevLex));
    };
    parts.fold(first, |acc, q| {
        if acc.is_unit() {
            q
        } else if q.is_unit() {
            acc
        } else {
            intersect(&acc, &q)
        }
    })
}

/// `I : J^∞` by iterating quotients until two successive ones coincide.
pub fn saturate<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Ideal<F> {
    let mut current = i.clone();
    for round in 0..MAX_SATURATION_ROUNDS {
        if current.is_unit() {
            return current;
        }
        let next = quotient(&current, j);
        // the chain is ascending, so one inclusion suffices
        if current.contains_ideal(&next) {
            log::debug!("saturation stable after {} rounds", round + 1);
            return current;
        }
        current = next;
    }
    panic!("saturation did not stabilize within {MAX_SATURATION_ROUNDS} rounds");
}

/// The ideal generated by all variables.
pub fn irrelevant_ideal<F: Field>(nvars: usize, one: &F) -> Ideal<F> {
    Ideal::new(
        nvars,
        (0..nvars)
            .map(|v| Polynomial::monomial(Monomial::var(nvars, v), one.one_like(), MonomialOrder::GrevLex))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal::QIdeal;
    use crate::poly::{default_names, parse_polynomial, rat};

    fn ideal(n: usize, gens: &[&str]) -> QIdeal {
        let names = default_names(n);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &names).unwrap()).collect())
    }

    #[test]
    fn principal_quotients() {
        assert!(quotient(&ideal(2, &["x0^2"]), &ideal(2, &["x0"])).same_as(&ideal(2, &["x0"])));
        assert!(quotient(&ideal(2, &["x0*x1"]), &ideal(2, &["x0"])).same_as(&ideal(2, &["x1"])));
    }

    #[test]
    fn quotient_of_square_of_maximal_ideal() {
        let sq = ideal(2, &["x0^2", "x0*x1", "x1^2"]);
        let m = ideal(2, &["x0", "x1"]);
        assert!(quotient(&sq, &m).same_as(&m));
    }

    #[test]
    fn intersections() {
        let a = ideal(2, &["x0"]);
        let b = ideal(2, &["x1"]);
        assert!(intersect(&a, &b).same_as(&ideal(2, &["x0*x1"])));
        let c = ideal(3, &["x0", "x1"]);
        let d = ideal(3, &["x1", "x2"]);
        assert!(intersect(&c, &d).same_as(&ideal(3, &["x1", "x0*x2"])));
    }

    #[test]
    fn saturation_examples() {
        let x0 = ideal(2, &["x0"]);
        assert!(saturate(&ideal(2, &["x0^2*x1"]), &x0).same_as(&ideal(2, &["x1"])));
        let three = ideal(3, &["x0"]);
        assert!(saturate(&ideal(3, &["x0*x1", "x0*x2"]), &three).same_as(&ideal(3, &["x1", "x2"])));
        let unit = ideal(2, &["1"]);
        assert!(saturate(&unit, &x0).is_unit());
    }

    #[test]
    fn saturation_removes_irrelevant_component() {
        let i = ideal(3, &["x0^2", "x0*x1", "x0*x2", "x1*x2"]);
        let sat = saturate(&i, &irrelevant_ideal(3, &rat(1)));
        assert!(sat.same_as(&ideal(3, &["x0", "x1*x2"])));
    }

    #[test]
    fn quotient_shortcuts() {
        let j = ideal(2, &["x0"]);
        assert!(quotient_by(&j, &parse_polynomial("x0*x1", &default_names(2)).unwrap()).is_unit());
        assert!(quotient_by(&QIdeal::zero(2), &parse_polynomial("x0", &default_names(2)).unwrap()).is_zero());
    }
}
