use std::collections::BTreeMap;

use super::Model;

/// Calls `f` on each `k`-subset of `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Every complement-structure on `n` elements: for each family of `n`
/// distinct subsets closed under complement (families in lexicographic
/// order of their sorted bit masks), every bijective assignment of the
/// subsets to the elements as extensions.
pub fn models_of_size(n: usize) -> Vec<Model> {
    assert!((1..=5).contains(&n), "model size {n} is out of range");
    let full = (1usize << n) - 1;
    let mut families = Vec::new();
    combinations(1 << n, n, &mut |fam| {
        if fam.iter().all(|s| fam.binary_search(&(full ^ s)).is_ok()) {
            families.push(fam.to_vec());
        }
    });
    let perms = permutations(n);
    let universe: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut out = Vec::with_capacity(families.len() * perms.len());
    for fam in &families {
        for perm in &perms {
            let ext: Vec<usize> = perm.iter().map(|&k| fam[k]).collect();
            let mem = (0..n).map(|a| (0..n).map(|x| ext[x] >> a & 1 == 1).collect()).collect();
            let comp = (0..n).map(|x| ext.iter().position(|&e| e == full ^ ext[x])).collect();
            out.push(Model { universe: universe.clone(), mem, comp, constants: BTreeMap::new() });
        }
    }
    out
}

/// All complement-structures of size `1..=max_size`, smallest first.
pub fn enumerate_models(max_size: usize) -> impl Iterator<Item = Model> {
    (1..=max_size).flat_map(models_of_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_complement_structure, check_isomorphism};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_models(1).count(), 0);
        assert_eq!(enumerate_models(2).count(), 4);
        assert_eq!(models_of_size(3).len(), 0);
    }

    #[test]
    fn every_model_is_a_complement_structure() {
        for m in enumerate_models(4) {
            assert!(check_complement_structure(&m).is_accepted(), "{m}");
            assert!(check_isomorphism(&m).is_accepted(), "{m}");
            let comp: Vec<usize> = m.comp.iter().map(|c| c.unwrap()).collect();
            assert!((0..m.size()).all(|x| comp[comp[x]] == x));
        }
    }

    #[test]
    fn canonical_order_of_size_two() {
        let ms = models_of_size(2);
        // family {∅, U} first (masks 0 and 3), then {{e0}, {e1}} (masks 1 and 2)
        assert_eq!(ms[0].to_string(), "(model (universe e0 e1) (mem (e0 e1) (e1 e1)) (comp (e0 e1) (e1 e0)))");
        assert_eq!(ms[1].to_string(), "(model (universe e0 e1) (mem (e0 e0) (e1 e0)) (comp (e0 e1) (e1 e0)))");
        assert_eq!(ms[2].to_string(), "(model (universe e0 e1) (mem (e0 e0) (e1 e1)) (comp (e0 e1) (e1 e0)))");
        assert_eq!(ms[3].to_string(), "(model (universe e0 e1) (mem (e0 e1) (e1 e0)) (comp (e0 e1) (e1 e0)))");
    }

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(permutations(3), vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0]
        ]);
    }
}
