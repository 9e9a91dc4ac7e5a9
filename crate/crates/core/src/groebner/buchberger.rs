//! Buchberger's algorithm with the Gebauer–Möller pair update and sugar selection.

use crate::poly::{Field, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<F: Field> {
    order: MonomialOrder,
    polys: Vec<Polynomial<F>>,
    sugar: Vec<u32>,
    alive: Vec<bool>,
    pairs: Vec<Pair>,
}

fn lm<F: Field>(p: &Polynomial<F>) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

/// Full reduction of `f` modulo `basis` (all terms, not just the head).
///
/// Basis elements need not be monic. `f` and the basis must share an order.
pub fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let refs: Vec<&Polynomial<F>> = basis.iter().filter(|g| !g.is_zero()).collect();
    reduce_by(f, &refs)
}

fn reduce_by<F: Field>(f: &Polynomial<F>, basis: &[&Polynomial<F>]) -> Polynomial<F> {
    let mut p = f.clone();
    // terms[..done] are already irreducible and never touched again
    let mut done = 0;
    while done < p.len() {
        let (m, c) = &p.terms()[done];
        let divisor = basis.iter().find(|g| lm(g).divides(m));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading_term().expect("nonzero");
                let q = m.div(gm).expect("divides");
                let factor = c.times(&gc.inverse().expect("nonzero lc"));
                p = p.sub_scaled(&factor, &q, g);
            }
            None => done += 1,
        }
    }
    p
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.inverse().unwrap());
    let b = g.mul_term(&l.div(gm).unwrap(), &gc.inverse().unwrap());
    a.sub(&b)
}

impl<F: Field> Engine<F> {
    fn is_monomial(&self, i: usize) -> bool {
        self.polys[i].len() == 1
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.sugar[i] + lcm.degree() - lm(&self.polys[i]).degree();
        let sj = self.sugar[j] + lcm.degree() - lm(&self.polys[j]).degree();
        si.max(sj)
    }

    /// Adds `h` (already inserted at index `k`) and updates pairs.
    fn update(&mut self, k: usize) {
        let h_lm = lm(&self.polys[k]).clone();
        let candidates: Vec<(usize, Monomial)> = (0..k)
            .filter(|&g| self.alive[g])
            .filter(|&g| !(self.is_monomial(g) && self.is_monomial(k)))
            .map(|g| (g, h_lm.lcm(lm(&self.polys[g]))))
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = h_lm.is_coprime(lm(&self.polys[*g]));
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone(), coprime));
            }
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !h_lm.divides(&p.lcm) {
                return true;
            }
            let li = h_lm.lcm(lm(&polys[p.i]));
            let lj = h_lm.lcm(lm(&polys[p.j]));
            li == p.lcm || lj == p.lcm
        });

        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let sugar = self.pair_sugar(g, k, &l);
            self.pairs.push(Pair { i: g, j: k, lcm: l, sugar });
        }

        for g in 0..k {
            if self.alive[g] && h_lm.divides(lm(&self.polys[g])) {
                self.alive[g] = false;
            }
        }
    }

    fn insert(&mut self, p: Polynomial<F>, sugar: u32) {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.alive.push(true);
        self.update(self.polys.len() - 1);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }

    fn alive_refs(&self) -> Vec<&Polynomial<F>> {
        self.polys
            .iter()
            .zip(&self.alive)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by decreasing leading monomial.
///
/// Every element is monic. The unit ideal yields `[1]`; the zero ideal yields `[]`.
pub fn groebner_basis<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Vec<Polynomial<F>> {
    let mut input: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    if input.is_empty() {
        return Vec::new();
    }
    let nvars = input[0].nvars();
    if let Some(c) = input.iter().find(|g| g.is_constant()) {
        return vec![Polynomial::constant(c.leading_coeff().unwrap().one_like(), nvars, order)];
    }
    // small leading terms first: fewer pairs survive the criteria
    input.sort_by(|a, b| order.cmp(lm(a), lm(b)));
    input.dedup();

    let mut engine = Engine {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        alive: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let basis = engine.alive_refs();
        let r = reduce_by(&g, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![r.monic()];
        }
        let sugar = g.total_degree().unwrap_or(0);
        engine.insert(r.monic(), sugar);
    }

    while let Some(pair) = engine.select() {
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j]);
        let basis = engine.alive_refs();
        let h = reduce_by(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            log::trace!("unit ideal reached");
            return vec![h.monic()];
        }
        engine.insert(h.monic(), pair.sugar);
    }

    let minimal: Vec<Polynomial<F>> = engine
        .polys
        .into_iter()
        .zip(engine.alive)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    interreduce(minimal, order)
}

/// Turns a minimal Gröbner basis into the reduced one.
fn interreduce<F: Field>(mut basis: Vec<Polynomial<F>>, order: MonomialOrder) -> Vec<Polynomial<F>> {
    basis.sort_by(|a, b| order.cmp(lm(b), lm(a)));
    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<&Polynomial<F>> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let (head_m, head_c) = basis[i].leading_term().expect("nonzero");
        let head = Polynomial::monomial(head_m.clone(), head_c.clone(), order);
        let tail = basis[i].sub(&head);
        out.push(head.add(&reduce_by(&tail, &others)).monic());
    }
    out.sort_by(|a, b| order.cmp(lm(b), lm(a)));
    out
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Compares two reduced bases of the same order for equality as sets.
pub fn same_basis<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}
