//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls the library's tracers or searches.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;

/// Simple connected graphs with `1..=max_edges` edges, one per isomorphism
/// class, grown edge by edge.
pub fn connected_graphs(max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut all = Vec::new();
    let mut layer: Vec<(usize, Vec<(usize, usize)>)> = vec![(2, vec![(0, 1)])];
    for _ in 1..=max_edges {
        all.extend(layer.iter().cloned());
        let mut next: HashMap<Vec<usize>, Vec<(usize, Vec<(usize, usize)>)>> = HashMap::new();
        for (n, edges) in &layer {
            let mut candidates = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if !edges.contains(&(u, v)) {
                        candidates.push((*n, (u, v)));
                    }
                }
                candidates.push((n + 1, (u, *n)));
            }
            for (n2, e) in candidates {
                let mut es = edges.clone();
                es.push(e);
                let key = invariant(n2, &es);
                let bucket = next.entry(key).or_default();
                if !bucket.iter().any(|(m, f)| *m == n2 && isomorphic(n2, &es, f)) {
                    bucket.push((n2, es));
                }
            }
        }
        let mut grown: Vec<_> = next.into_values().flatten().collect();
        grown.sort();
        layer = grown;
    }
    all
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn invariant(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let d = degrees(n, edges);
    let mut profile: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| if a == v { Some(d[b]) } else if b == v { Some(d[a]) } else { None })
                .collect();
            nb.sort();
            (d[v], nb)
        })
        .collect();
    profile.sort();
    let mut key = vec![n, edges.len()];
    for (dv, nb) in profile {
        key.push(dv);
        key.extend(nb);
        key.push(usize::MAX);
    }
    key
}

fn isomorphic(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    let (aa, ab) = (adjacency(n, a), adjacency(n, b));
    let (da, db) = (degrees(n, a), degrees(n, b));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        v: usize,
        n: usize,
        aa: &[Vec<bool>],
        ab: &[Vec<bool>],
        da: &[usize],
        db: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            if (0..v).any(|u| aa[u][v] != ab[map[u]][w]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(v + 1, n, aa, ab, da, db, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    extend(0, n, &aa, &ab, &da, &db, &mut map, &mut used)
}

/// Darts `2e` (from the first endpoint) and `2e + 1`, listed per tail.
pub fn out_darts(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        out[u].push(2 * e);
        out[v].push(2 * e + 1);
    }
    out
}

/// Every cyclic order of `items` with the first item fixed.
pub fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let rest = &items[1..];
    let mut idx: Vec<usize> = (0..rest.len()).collect();
    loop {
        let mut cyc = vec![items[0]];
        cyc.extend(idx.iter().map(|&i| rest[i]));
        out.push(cyc);
        // next lexicographic permutation
        let Some(k) = (0..idx.len().saturating_sub(1)).rev().find(|&k| idx[k] < idx[k + 1]) else { break };
        let l = (k + 1..idx.len()).rev().find(|&l| idx[l] > idx[k]).unwrap();
        idx.swap(k, l);
        idx[k + 1..].reverse();
    }
    out
}

/// Face count of a rotation, with the signed walk when `neg` marks edges.
/// Each face is counted once by halving the number of state orbits in the
/// signed case, where every face appears once per direction.
pub fn count_faces(n_darts: usize, rotation: &[Vec<usize>], neg: &[bool]) -> usize {
    let mut next = vec![0; n_darts];
    let mut prev = vec![0; n_darts];
    for rot in rotation {
        for k in 0..rot.len() {
            next[rot[k]] = rot[(k + 1) % rot.len()];
            prev[rot[(k + 1) % rot.len()]] = rot[k];
        }
    }
    if neg.iter().all(|&b| !b) {
        let mut seen = vec![false; n_darts];
        let mut faces = 0;
        for s in 0..n_darts {
            if !seen[s] {
                faces += 1;
                let mut d = s;
                while !seen[d] {
                    seen[d] = true;
                    d = next[d ^ 1];
                }
            }
        }
        return faces;
    }
    let mut seen = vec![false; 2 * n_darts];
    let mut orbits = 0;
    for s in 0..2 * n_darts {
        if seen[s] {
            continue;
        }
        orbits += 1;
        let (mut d, mut cw) = (s / 2, s % 2 == 1);
        loop {
            seen[2 * d + cw as usize] = true;
            let rev = d ^ 1;
            cw ^= neg[d / 2];
            d = if cw { prev[rev] } else { next[rev] };
            if seen[2 * d + cw as usize] {
                break;
            }
        }
    }
    orbits / 2
}

/// True iff some rotation system gives exactly one face.
pub fn brute_monofacial(n: usize, edges: &[(usize, usize)], neg: &[bool]) -> bool {
    let out = out_darts(n, edges);
    let choices: Vec<Vec<Vec<usize>>> = out.iter().map(|d| cyclic_orders(d)).collect();
    let mut pick = vec![0; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| choices[v][pick[v]].clone()).collect();
        if count_faces(2 * edges.len(), &rot, neg) == 1 {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                break;
            }
            pick[v] = 0;
            v += 1;
        }
    }
}

/// Signatures up to switching: the edges of a BFS tree from vertex 0 stay
/// positive and every other edge takes both signs.
pub fn signature_classes(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut tree = vec![false; edges.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for (e, &(u, v)) in edges.iter().enumerate() {
            if reached[u] != reached[v] {
                reached[u] = true;
                reached[v] = true;
                tree[e] = true;
                changed = true;
            }
        }
    }
    let free: Vec<usize> = (0..edges.len()).filter(|&e| !tree[e]).collect();
    (0..1u32 << free.len())
        .map(|mask| {
            let mut neg = vec![false; edges.len()];
            for (k, &e) in free.iter().enumerate() {
                neg[e] = mask >> k & 1 == 1;
            }
            neg
        })
        .collect()
}

/// `(M, k)` pairs with `M <= 41` for which `D(M, k)` exists and the random
/// generator below finds one quickly.
pub const SYSTEM_PARAMS: &[(i64, usize)] = &[
    (7, 3),
    (13, 3),
    (19, 3),
    (25, 3),
    (31, 3),
    (37, 3),
    (9, 4),
    (17, 4),
    (25, 4),
    (33, 4),
    (41, 4),
    (11, 5),
    (21, 5),
    (31, 5),
    (41, 5),
    (13, 6),
    (25, 6),
    (37, 6),
    (15, 7),
    (29, 7),
    (17, 8),
    (33, 8),
];

fn residue(v: i64, m: i64) -> i64 {
    let r = v.rem_euclid(m);
    if r > m / 2 {
        r - m
    } else {
        r
    }
}

/// A random `D(M, k)` by randomized greedy construction with restarts; each
/// part ends with the element forced by its sum.
pub fn random_heffter_system(rng: &mut impl Rng, m: i64, k: usize) -> Option<Vec<Vec<i64>>> {
    let half = (m - 1) / 2;
    'attempt: for _ in 0..20_000 {
        let mut unused: Vec<i64> = (1..=half).collect();
        let mut parts = Vec::new();
        while !unused.is_empty() {
            let mut part = Vec::with_capacity(k);
            for _ in 0..k - 1 {
                let x = unused.swap_remove(rng.gen_range(0..unused.len()));
                part.push(if rng.gen_bool(0.5) { x } else { -x });
            }
            let last = residue(-part.iter().sum::<i64>(), m);
            match unused.iter().position(|&x| x == last.abs()) {
                Some(p) if last != 0 => {
                    unused.swap_remove(p);
                    part.push(last);
                }
                _ => continue 'attempt,
            }
            parts.push(part);
        }
        return Some(parts);
    }
    None
}

/// True iff no proper cyclic run of `seq` sums to zero mod `m`, checked by
/// brute force over every run.
pub fn simple_by_runs(seq: &[i64], m: i64) -> bool {
    let k = seq.len();
    (0..k).all(|start| (1..k).all(|len| (0..len).map(|i| seq[(start + i) % k]).sum::<i64>().rem_euclid(m) != 0))
}
