use std::collections::BTreeSet;
use std::sync::Arc;

use super::*;

fn d(label: &str) -> Arc<RootDatum> {
    RootDatum::get(label).unwrap()
}

fn coords(v: &[WeightVec]) -> BTreeSet<Vec<i64>> {
    v.iter().map(|x| x.coords().to_vec()).collect()
}

#[test]
fn group_orders() {
    for (label, n) in [("A1", 2), ("A2", 6), ("A3", 24), ("C2", 8), ("B3", 48), ("D4", 192), ("G2", 12), ("A1xC2", 16)] {
        assert_eq!(d(label).weyl().unwrap().order(), n, "{label}");
    }
    assert!(matches!(d("E6").weyl(), Err(Error::Capability(_))));
}

#[test]
fn words_are_reduced_and_inverses_work() {
    let dt = d("B3");
    let g = dt.weyl().unwrap();
    for w in g.elements() {
        // length equals the number of positive roots sent negative
        let inv = (0..dt.roots().len()).filter(|&a| !g.root_image(w, a).1).count();
        assert_eq!(inv, g.length(w));
        assert_eq!(g.mul(w, g.inverse(w)), WeylElement::IDENTITY);
        let word: Vec<usize> = g.word(w).iter().map(|&k| k as usize).collect();
        assert_eq!(g.from_word(&word).unwrap(), w);
    }
    assert_eq!(g.length(g.longest()), 9);
}

#[test]
fn action_preserves_the_pairing() {
    let dt = d("C3");
    let g = dt.weyl().unwrap();
    let v = vec![3, -1, 2];
    for w in g.elements() {
        let wv = g.act_raw(w, &v);
        for a in 0..dt.roots().len() {
            let (b, pos) = g.root_image(w, a);
            let sign = if pos { 1 } else { -1 };
            // ⟨wα, wv⟩ = ⟨α, v⟩
            assert_eq!(sign * dot(&dt.roots()[b], &wv), dot(&dt.roots()[a], &v));
        }
    }
}

#[test]
fn orbit_examples() {
    let g3 = d("A2");
    let o = orbit(&g3, &g3.parse_weight("1,0,0").unwrap()).unwrap();
    assert_eq!(coords(&o), BTreeSet::from([vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
    let c2 = d("C2");
    let o = orbit(&c2, &c2.parse_weight("1,1").unwrap()).unwrap();
    // brute force over signed permutations
    let mut brute = BTreeSet::new();
    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        brute.insert(vec![a, b]);
        brute.insert(vec![b, a]);
    }
    assert_eq!(coords(&o), brute);
    assert_eq!(orbit(&c2, &c2.zero()).unwrap().len(), 1);
}

#[test]
fn stabilizer_orders() {
    let g3 = d("A2");
    assert_eq!(stabilizer_order(&g3, &g3.parse_weight("1,0,0").unwrap()).unwrap(), 2);
    assert_eq!(stabilizer_order(&g3, &g3.parse_weight("2,1,0").unwrap()).unwrap(), 1);
    assert_eq!(stabilizer_order(&g3, &g3.zero()).unwrap(), 6);
}

#[test]
fn bruhat_examples() {
    let g = d("A2").weyl().unwrap();
    let (s1, s2) = (g.simple_reflection(0), g.simple_reflection(1));
    for w in g.elements() {
        assert!(g.bruhat_leq(WeylElement::IDENTITY, w));
        assert!(g.bruhat_leq(w, g.longest()));
    }
    assert!(g.bruhat_leq(s1, g.mul(s1, s2)));
    assert!(!g.bruhat_leq(s1, s2));
    assert!(!g.bruhat_leq(s2, s1));
}

#[test]
fn bruhat_is_a_partial_order_graded_by_length() {
    let g = d("B3").weyl().unwrap();
    let all: Vec<_> = g.elements().collect();
    for &u in &all {
        for &w in &all {
            if g.bruhat_leq(u, w) {
                assert!(g.length(u) <= g.length(w));
                if g.bruhat_leq(w, u) {
                    assert_eq!(u, w);
                }
            }
        }
    }
}

#[test]
fn minimal_double_coset_reps() {
    let dt = d("A2");
    let g = dt.weyl().unwrap();
    let regular = vec![2, 1, 0];
    for w in g.elements() {
        assert_eq!(g.minimal_double_coset_rep(w, &regular, &regular), w);
    }
    let lam = vec![1, 1, 0];
    let mu = vec![1, 0, 0];
    for w in g.elements() {
        let rep = g.minimal_double_coset_rep(w, &lam, &mu);
        // brute force over the double coset
        let left = g.stabilizer(&lam);
        let right = g.stabilizer(&mu);
        let coset: Vec<_> =
            left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(g.mul(a, w), b)).collect();
        let min = coset.iter().map(|&x| g.length(x)).min().unwrap();
        assert_eq!(g.length(rep), min);
        assert_eq!(coset.iter().filter(|&&x| g.length(x) == min).collect::<BTreeSet<_>>().len(), 1);
        assert!(g.length(rep) <= g.length(w));
    }
}

#[test]
fn minimal_rep_makes_lambda_plus_w_mu_dominant_when_possible() {
    // for minuscule μ, λ + w*μ is dominant whenever some element of the coset makes it so
    for label in ["A1", "A2", "C2", "B2"] {
        let dt = d(label);
        let g = dt.weyl().unwrap();
        for &m in &dt.minuscule_fundamentals() {
            let Some(mu) = dt.fundamental_coweight(m).unwrap() else { continue };
            for lam in [vec![0; dt.rank()], dt.two_rho_vee().to_vec(), mu.coords().to_vec()] {
                for w in g.elements() {
                    let rep = g.minimal_double_coset_rep(w, &lam, mu.coords());
                    let left = g.stabilizer(&lam);
                    let any_dom = left.iter().any(|&a| {
                        let x: Vec<i64> =
                            lam.iter().zip(g.act_raw(g.mul(a, w), mu.coords())).map(|(p, q)| p + q).collect();
                        dt.is_dominant_raw(&x)
                    });
                    let x: Vec<i64> = lam.iter().zip(g.act_raw(rep, mu.coords())).map(|(p, q)| p + q).collect();
                    if any_dom {
                        assert!(dt.is_dominant_raw(&x), "{label}");
                    }
                }
            }
        }
    }
}

#[test]
fn affine_lengths() {
    let g2 = d("A1");
    let aw = AffineWeyl::new(g2.clone()).unwrap();
    assert_eq!(aw.length(&AffineElement::translation_by(&g2.parse_weight("1,0").unwrap())), 1);
    let c2 = d("C2");
    let aw = AffineWeyl::new(c2.clone()).unwrap();
    let g = aw.group().clone();
    for w in g.elements() {
        assert_eq!(aw.length(&aw.finite(w)), g.length(w));
    }
    let lam = c2.parse_weight("2,1").unwrap();
    assert_eq!(aw.length(&AffineElement::translation_by(&lam)) as i64, dot(c2.two_rho(), lam.coords()));
    for i in 0..aw.num_simple() {
        assert_eq!(aw.length(aw.simple(i)), 1);
        assert_eq!(aw.mul(aw.simple(i), aw.simple(i)), aw.identity());
    }
}

#[test]
fn affine_simple_reflections_change_length_by_one() {
    for label in ["A2", "C2", "G2", "A1xB2"] {
        let dt = d(label);
        let aw = AffineWeyl::new(dt.clone()).unwrap();
        for mu in [dt.zero(), dt.weight(dt.two_rho_vee().to_vec()).unwrap()] {
            for x in double_coset_elements(&dt, &mu).unwrap() {
                let l = aw.length(&x) as i64;
                for i in 0..aw.num_simple() {
                    let lx = aw.length(&aw.mul(&x, aw.simple(i))) as i64;
                    let ly = aw.length(&aw.mul(aw.simple(i), &x)) as i64;
                    assert_eq!((lx - l).abs(), 1, "{label}");
                    assert_eq!((ly - l).abs(), 1, "{label}");
                }
                let (word, omega) = aw.reduced_decomposition(&x);
                assert_eq!(word.len() as i64, l);
                assert_eq!(aw.length(&omega), 0);
                let rebuilt = word.iter().rev().fold(omega, |acc, &i| aw.mul(aw.simple(i), &acc));
                assert_eq!(rebuilt, x);
            }
        }
    }
}

#[test]
fn affine_product_law() {
    let dt = d("A2");
    let aw = AffineWeyl::new(dt.clone()).unwrap();
    let g = aw.group().clone();
    let x = AffineElement::new(vec![1, 0, -1], g.simple_reflection(0));
    let y = AffineElement::new(vec![0, 2, 0], g.simple_reflection(1));
    let xy = aw.mul(&x, &y);
    let v = vec![3, -1, 4];
    assert_eq!(aw.act_raw(&xy, &v), aw.act_raw(&x, &aw.act_raw(&y, &v)));
    assert_eq!(aw.mul(&x, &aw.inverse(&x)), aw.identity());
}

#[test]
fn double_coset_sizes() {
    let g2 = d("A1");
    assert_eq!(double_coset_elements(&g2, &g2.parse_weight("1,0").unwrap()).unwrap().len(), 4);
    let c2 = d("C2");
    assert_eq!(double_coset_elements(&c2, &c2.parse_weight("1,1").unwrap()).unwrap().len(), 32);
    assert_eq!(double_coset_elements(&c2, &c2.zero()).unwrap().len(), 8);
    let aw = AffineWeyl::new(c2.clone()).unwrap();
    let set = double_coset_elements(&c2, &c2.parse_weight("1,1").unwrap()).unwrap();
    let max = set.iter().map(|x| aw.length(x)).max().unwrap();
    assert_eq!(set.iter().filter(|x| aw.length(x) == max).count(), 1);
}
