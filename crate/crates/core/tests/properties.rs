use std::cmp::Ordering;

use bek_core::bei::{binomial_edge_ideal, power_contained_in_symbolic, symbolic_power};
use bek_core::graph::{cut_sets, find_closed_labeling, is_closed_under_labeling};
use bek_core::groebner::{
    buchberger, ideal_equal, ideal_intersection, ideal_member, is_reduced, reduced_gb,
    satisfies_buchberger_criterion,
};
use bek_core::monomial::{minimal_primes_squarefree, mono_intersect, mono_product, prime_power};
use bek_core::ring::{make_minor, Coeff, Monomial};
use bek_core::{Config, Error, Graph, Ideal, MonomialIdeal, MonomialOrder, Polynomial, RingContext};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn ctx(n: usize) -> RingContext {
    RingContext::new(n, 0).unwrap()
}

fn cfg() -> Config {
    Config::default()
}

// keeps GB runs on arbitrary generators small
fn small_cfg() -> Config {
    Config { max_basis: 150, max_degree: 12, ..Config::default() }
}

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            let edges = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn nonempty_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(min_n, max_n).prop_filter("needs an edge", |g| g.num_edges() > 0)
}

fn poly_in(n: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, 2 * n), -4i64..=4), 0..5).prop_map(move |terms| {
        let c = ctx(n);
        Polynomial::from_terms(
            c,
            terms.into_iter().map(|(e, k)| (Monomial::from_exponents(&c, &e), Coeff::from_int(k))).collect(),
        )
    })
}

// polynomials in x1, x2, y1, y2
fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    poly_in(2)
}

fn mono_strategy(vars: usize, max_exp: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=max_exp, vars)
}

// monomials over x1, x2, x3, y1, y2, y3
fn monomial_ideal_strategy(max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(mono_strategy(6, max_exp), 1..5).prop_map(|ms| {
        let c = ctx(3);
        MonomialIdeal::new(c, ms.iter().map(|e| Monomial::from_exponents(&c, e)).collect())
    })
}

fn components_oracle(g: &Graph, removed: u64) -> usize {
    fn root(p: &[usize], mut v: usize) -> usize {
        while p[v] != v {
            v = p[v];
        }
        v
    }
    let n = g.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    for (i, j) in g.edges() {
        if removed & (1 << i) == 0 && removed & (1 << j) == 0 {
            let (a, b) = (root(&parent, i), root(&parent, j));
            parent[a] = b;
        }
    }
    (1..=n).filter(|&v| removed & (1 << v) == 0).map(|v| root(&parent, v)).unique().count()
}

fn closed_oracle(g: &Graph) -> bool {
    (1..=g.n()).tuple_combinations().all(|(i, j, k)| {
        !g.has_edge(i, k) || (g.has_edge(i, j) && g.has_edge(j, k))
    })
}

fn to_big(c: &Coeff) -> BigRational {
    c.to_string()
        .split_once('/')
        .map(|(a, b)| BigRational::new(a.parse::<BigInt>().unwrap(), b.parse::<BigInt>().unwrap()))
        .unwrap_or_else(|| BigRational::from_integer(c.to_string().parse::<BigInt>().unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coeff_matches_big_rational(a in any::<i64>(), b in 1i64..1000, c in any::<i64>(), d in 1i64..1000) {
        let x = Coeff::from_ratio(a, b);
        let y = Coeff::from_ratio(c, d);
        let (bx, by) = (to_big(&x), to_big(&y));
        prop_assert_eq!(to_big(&(&x + &y)), &bx + &by);
        prop_assert_eq!(to_big(&(&x - &y)), &bx - &by);
        prop_assert_eq!(to_big(&(&x * &y)), &bx * &by);
        if !y.is_zero() {
            prop_assert_eq!(to_big(&(&x / &y)), &bx / &by);
        }
    }

    #[test]
    fn polynomial_canonical_form(p in poly_strategy(), seed in any::<u64>()) {
        let c = ctx(2);
        let mut raw: Vec<(Monomial, Coeff)> = p.terms().iter().map(|t| (t.mono, t.coeff.clone())).collect();
        // split each coefficient into two summands and shuffle
        let extra: Vec<(Monomial, Coeff)> = raw.iter().map(|(m, _)| (*m, Coeff::from_int(1))).collect();
        for (_, k) in raw.iter_mut() {
            *k = &*k - &Coeff::one();
        }
        raw.extend(extra);
        let len = raw.len().max(1);
        raw.rotate_left((seed as usize) % len);
        let q = Polynomial::from_terms(c, raw);
        prop_assert_eq!(&q, &p);
        prop_assert!(p.terms().windows(2).all(|w| w[0].mono > w[1].mono));
        prop_assert!(p.terms().iter().all(|t| !t.coeff.is_zero()));
    }

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn lex_is_a_monomial_order(a in mono_strategy(4, 3), b in mono_strategy(4, 3), m in mono_strategy(4, 3)) {
        let c = ctx(2);
        let lex = MonomialOrder::Lex;
        let (a, b, m) = (Monomial::from_exponents(&c, &a), Monomial::from_exponents(&c, &b), Monomial::from_exponents(&c, &m));
        let ord = lex.compare(&a, &b).unwrap();
        prop_assert_eq!(lex.compare(&a.mul(&m), &b.mul(&m)).unwrap(), ord);
        prop_assert_ne!(lex.compare(&a.mul(&m), &Monomial::one(&c)).unwrap(), Ordering::Less);
        prop_assert_eq!(lex.compare(&b, &a).unwrap(), ord.reverse());
    }

    #[test]
    fn minors_are_homogeneous(n in 2usize..8, i in 1usize..8, j in 1usize..8) {
        let c = ctx(n);
        match make_minor(&c, i, j) {
            Ok(p) => {
                prop_assert!(i < j && j <= n);
                prop_assert!(p.is_homogeneous());
                prop_assert_eq!(p.degree(), 2);
                prop_assert_eq!(p.len(), 2);
            }
            Err(e) => prop_assert!(matches!(e, Error::InvalidIndex(_))),
        }
    }

    #[test]
    fn gb_postcondition_and_uniqueness(g in nonempty_graph(2, 5), extra in poly_strategy(), seed in any::<u64>(), scale in 1i64..5) {
        let j = binomial_edge_ideal(&g).unwrap();
        let c = *j.ctx();
        let gb = reduced_gb(&j, MonomialOrder::Lex, &cfg()).unwrap();
        prop_assert!(satisfies_buchberger_criterion(gb.basis()));
        prop_assert!(is_reduced(gb.basis()));
        prop_assert!(gb.basis().iter().all(|p| p.is_homogeneous()));
        prop_assert!(gb.basis().windows(2).all(|w| w[0].lead_mono() < w[1].lead_mono()));

        let mut gens = j.gens().to_vec();
        let len = gens.len();
        gens.rotate_left((seed as usize) % len);
        gens.reverse();
        gens[0] = gens[0].scale(&Coeff::from_ratio(-scale, 3));
        let shuffled = buchberger(c, &gens, &cfg()).unwrap();
        prop_assert_eq!(shuffled.as_slice(), gb.basis());

        // arbitrary generators in a small ring
        let small = ctx(2);
        let gens = vec![make_minor(&small, 1, 2).unwrap(), extra];
        if let Ok(basis) = buchberger(small, &gens, &small_cfg()) {
            prop_assert!(satisfies_buchberger_criterion(&basis));
            prop_assert!(is_reduced(&basis));
            let rev: Vec<Polynomial> = gens.iter().rev().cloned().collect();
            prop_assert_eq!(buchberger(small, &rev, &small_cfg()).unwrap(), basis);
        }
    }

    #[test]
    fn intersection_membership(g1 in nonempty_graph(4, 4), g2 in nonempty_graph(4, 4), h in poly_in(4), v in 1usize..=4) {
        let c = ctx(4);
        let a = binomial_edge_ideal(&g1).unwrap();
        let b = Ideal::new(c, binomial_edge_ideal(&g2).unwrap().gens().iter().skip(1)
            .cloned()
            .chain([Polynomial::var(c, c.x(v)), Polynomial::var(c, c.y(v))])
            .collect()).unwrap();
        let meet = ideal_intersection(&a, &b, &cfg()).unwrap();
        let (fa, fb) = (&a.gens()[0], &b.gens()[0]);
        for cand in [fa.mul(fb).unwrap(), h.clone(), h.mul(fa).unwrap(), fa.clone(), fb.clone(), h.mul(fb).unwrap()] {
            let both = ideal_member(&cand, &a, &cfg()).unwrap() && ideal_member(&cand, &b, &cfg()).unwrap();
            prop_assert_eq!(ideal_member(&cand, &meet, &cfg()).unwrap(), both);
        }
        prop_assert!(ideal_member(&fa.mul(fb).unwrap(), &meet, &cfg()).unwrap());
    }

    #[test]
    fn monomial_intersection_matches_divisibility(a in monomial_ideal_strategy(2), b in monomial_ideal_strategy(2), probes in proptest::collection::vec(mono_strategy(6, 3), 1..12)) {
        let c = ctx(3);
        let meet = mono_intersect(&a, &b).unwrap();
        let prod = mono_product(&a, &b).unwrap();
        let divides_some = |ideal: &MonomialIdeal, m: &Monomial| ideal.gens().iter().any(|g| {
            (0..6).all(|v| g.exponent(v) <= m.exponent(v))
        });
        for e in &probes {
            let m = Monomial::from_exponents(&c, e);
            prop_assert_eq!(meet.contains(&m), divides_some(&a, &m) && divides_some(&b, &m));
            if prod.contains(&m) {
                prop_assert!(meet.contains(&m));
            }
        }
        prop_assert!(meet.gens().iter().tuple_combinations().all(|(x, y)| !x.divides(y) && !y.divides(x)));
        prop_assert!(a.contains_ideal(&meet) && b.contains_ideal(&meet));
    }

    #[test]
    fn squarefree_ideal_is_intersection_of_its_primes(i in monomial_ideal_strategy(1)) {
        let c = ctx(3);
        prop_assume!(!i.gens().iter().any(|m| m.is_one()));
        let primes = minimal_primes_squarefree(&i).unwrap();
        for p in &primes {
            let meets = |vars: &[usize]| i.gens().iter().all(|m| vars.iter().any(|&v| m.exponent(v) > 0));
            prop_assert!(meets(p.vars()));
            for drop in 0..p.vars().len() {
                let mut fewer = p.vars().to_vec();
                fewer.remove(drop);
                prop_assert!(!meets(&fewer));
            }
        }
        let meet = primes
            .iter()
            .map(|p| prime_power(&c, p, 1).unwrap())
            .reduce(|x, y| mono_intersect(&x, &y).unwrap())
            .unwrap();
        prop_assert_eq!(meet, i);
    }

    #[test]
    fn components_match_union_find(g in graph_strategy(1, 7), removed in any::<u8>()) {
        let mask = ((removed as u64) << 1) & ((1u64 << (g.n() + 1)) - 2);
        let s: Vec<usize> = (1..=g.n()).filter(|v| mask & (1 << v) != 0).collect();
        let cs = g.components_without(&s).unwrap();
        prop_assert_eq!(cs.c(), components_oracle(&g, mask));
        let mut all: Vec<usize> = cs.components.concat();
        all.sort_unstable();
        let rest: Vec<usize> = (1..=g.n()).filter(|v| mask & (1 << v) == 0).collect();
        prop_assert_eq!(all, rest);
    }

    #[test]
    fn cut_sets_match_brute_force(g in graph_strategy(1, 6)) {
        let n = g.n();
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..(1 << n) {
            let m = mask << 1;
            let c = components_oracle(&g, m);
            let ok = (1..=n).filter(|v| m & (1 << v) != 0).all(|v| components_oracle(&g, m & !(1 << v)) < c);
            if ok {
                expected.push((1..=n).filter(|v| m & (1 << v) != 0).collect());
            }
        }
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let got: Vec<Vec<usize>> = cut_sets(&g, &cfg()).unwrap().into_iter().map(|c| c.set).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn closed_labelings_are_closed(g in graph_strategy(1, 5)) {
        prop_assert_eq!(is_closed_under_labeling(&g), closed_oracle(&g));
        let exists = (1..=g.n()).permutations(g.n()).any(|p| closed_oracle(&g.relabel(&p).unwrap()));
        match find_closed_labeling(&g, &cfg()).unwrap() {
            Some(perm) => prop_assert!(closed_oracle(&g.relabel(&perm).unwrap())),
            None => prop_assert!(!exists),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ordinary_power_inside_symbolic(g in nonempty_graph(2, 4), k in 2usize..=3) {
        prop_assert!(power_contained_in_symbolic(&g, k, &cfg()).unwrap());
    }

    #[test]
    fn first_symbolic_power_is_the_ideal(g in nonempty_graph(2, 4)) {
        let j = binomial_edge_ideal(&g).unwrap();
        prop_assert!(ideal_equal(&symbolic_power(&g, 1, &cfg()).unwrap(), &j, &cfg()).unwrap());
    }
}
