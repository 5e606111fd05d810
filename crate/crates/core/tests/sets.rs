//! Desk-scale semantic checks of the rewriting relation, mesh sets and
//! rewriting sets: each symbolic answer is compared with the languages it
//! describes, restricted to terms of bounded size.

use rustc_hash::FxHashSet;
use sk_grammars::membership::Matcher;
use sk_grammars::term::enumerate_up_to;
use sk_grammars::{GrammarStore, Node, Term, TreeId};

const MAX_SIZE: usize = 6;

fn terms() -> Vec<Term> {
    enumerate_up_to(MAX_SIZE).into_iter().flatten().collect()
}

/// Productions of `R_0 ..= R_n`, their arguments, and the bare symbols.
fn pool(store: &mut GrammarStore, n: usize) -> Vec<TreeId> {
    let mut out = Vec::new();
    for text in ["S", "K", "C"] {
        out.push(store.tree(text).unwrap());
    }
    for i in 0..=n {
        out.push(store.tree(&format!("R{i}")).unwrap());
        for &p in store.grammar(i).unwrap().productions() {
            out.push(p);
            out.extend(store.arena().spine(p).1);
        }
    }
    let mut seen = FxHashSet::default();
    out.retain(|t| seen.insert(*t));
    out
}

/// Indices of `terms` in `L(a)`.
fn language(m: &mut Matcher<'_>, a: TreeId, terms: &[Term]) -> Vec<bool> {
    terms.iter().map(|t| m.generates(a, t).unwrap()).collect()
}

#[test]
fn rewriting_implies_language_inclusion() {
    let mut store = GrammarStore::with_grammars(2).unwrap();
    let pool = pool(&mut store, 2);
    let mut pairs = Vec::new();
    for &a in &pool {
        for &b in &pool {
            if store.rewrites(a, b).unwrap() {
                pairs.push((a, b));
            }
        }
    }
    assert!(pairs.len() > pool.len());
    let terms = terms();
    let mut m = Matcher::new(&store);
    let langs: Vec<Vec<bool>> = pool.iter().map(|&a| language(&mut m, a, &terms)).collect();
    let index = |t: TreeId| pool.iter().position(|&p| p == t).unwrap();
    for (a, b) in pairs {
        let (la, lb) = (&langs[index(a)], &langs[index(b)]);
        for (i, t) in terms.iter().enumerate() {
            assert!(
                !lb[i] || la[i],
                "{} rewrites to {} but {t} is only in the latter",
                store.display(a),
                store.display(b)
            );
        }
    }
}

#[test]
fn rewriting_is_transitive() {
    let mut store = GrammarStore::with_grammars(1).unwrap();
    let pool = pool(&mut store, 1);
    let n = pool.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = store.rewrites(pool[i], pool[j]).unwrap();
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !rel[i][j] {
                continue;
            }
            for k in 0..n {
                if rel[j][k] {
                    assert!(
                        rel[i][k],
                        "{} {} {}",
                        store.display(pool[i]),
                        store.display(pool[j]),
                        store.display(pool[k])
                    );
                }
            }
        }
    }
}

/// Trees `X`, `X a` and `X a b` over small arguments, together with the
/// productions of `R_0` and `R_1` and a few trees containing `C`.
fn mesh_pool(store: &mut GrammarStore) -> Vec<TreeId> {
    let atoms = ["S", "K", "C", "R0", "R1"];
    let mut texts: Vec<String> = vec!["R2".into(), "K C R0 S".into(), "K S (S R0 C) S".into()];
    for head in ["S", "K"] {
        texts.push(head.into());
        for a in atoms {
            texts.push(format!("{head} {a}"));
            for b in atoms {
                texts.push(format!("{head} {a} {b}"));
            }
        }
    }
    let mut out = pool(store, 1);
    for t in texts {
        out.push(store.tree(&t).unwrap());
    }
    let mut seen = FxHashSet::default();
    out.retain(|t| seen.insert(*t));
    out
}

#[test]
fn mesh_sets_partition_intersections() {
    let mut store = GrammarStore::with_grammars(2).unwrap();
    let pool = mesh_pool(&mut store);
    let mut cases = Vec::new();
    for &a in &pool {
        for &b in &pool {
            if a < b && !store.rewrites(a, b).unwrap() && !store.rewrites(b, a).unwrap() {
                let mesh = store.mesh_set(a, b).unwrap().to_vec();
                for &g in &mesh {
                    assert!(store.rewrites(a, g).unwrap() && store.rewrites(b, g).unwrap());
                }
                cases.push((a, b, mesh));
            }
        }
    }
    assert!(cases.iter().any(|c| !c.2.is_empty()));

    let terms = terms();
    let mut m = Matcher::new(&store);
    for (a, b, mesh) in &cases {
        for t in &terms {
            let both = m.generates(*a, t).unwrap() && m.generates(*b, t).unwrap();
            let hits = mesh.iter().filter(|&&g| m.generates(g, t).unwrap()).count();
            assert_eq!(
                hits,
                usize::from(both),
                "{t} against {} and {}",
                store.display(*a),
                store.display(*b)
            );
        }
    }
}

#[test]
fn rewriting_sets_cover_s_redex_arguments() {
    let mut store = GrammarStore::with_grammars(2).unwrap();
    let mut pairs = FxHashSet::default();
    for i in 0..=1 {
        for &p in store.grammar(i).unwrap().productions() {
            let args = store.arena().spine(p).1;
            for w in args.windows(2) {
                pairs.insert((w[0], w[1]));
            }
        }
    }
    let mut cases = Vec::new();
    for (a, b) in pairs {
        let rs = store.rewriting_set(a, b).unwrap().to_vec();
        for &phi in &rs {
            let Node::App(_, right) = store.arena().node(phi) else {
                panic!(
                    "rewriting set element {} is not an application",
                    store.display(phi)
                );
            };
            assert!(store.rewrites(a, right).unwrap());
            assert!(store.rewrites(b, phi).unwrap());
        }
        cases.push((a, b, rs));
    }
    cases.sort();

    let terms: Vec<Term> = terms()
        .into_iter()
        .filter(|t| t.as_app().is_some())
        .collect();
    let mut m = Matcher::new(&store);
    for (a, b, rs) in &cases {
        for t in &terms {
            let (_, x) = t.as_app().unwrap();
            if m.generates(*a, x).unwrap() && m.generates(*b, t).unwrap() {
                assert!(
                    rs.iter().any(|&phi| m.generates(phi, t).unwrap()),
                    "{t} not covered by the rewriting set of {} and {}",
                    store.display(*a),
                    store.display(*b)
                );
            }
        }
    }
}

#[test]
fn distinct_grammars_are_disjoint_on_small_terms() {
    let store = GrammarStore::with_grammars(3).unwrap();
    let mut m = Matcher::new(&store);
    for t in terms() {
        assert!(m.memberships(&t, 3).unwrap().len() <= 1, "{t}");
    }
}
