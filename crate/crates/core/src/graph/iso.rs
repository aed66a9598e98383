use super::Graph;

/// Finds a bijection `phi` with `uv ∈ E(a) ⇔ phi(u)phi(v) ∈ E(b)`, by backtracking.
///
/// Intended for the small quotient graphs that come out of decompositions
/// (a dozen vertices at most). Returns the lexicographically first mapping.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let (ra, rb) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &ra, &rb, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(a: &Graph, b: &Graph, da: &[usize], db: &[usize], v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || da[v] != db[w] {
            continue;
        }
        if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, da, db, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycle() {
        let a = Graph::cycle(5);
        let b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        let m = find_isomorphism(&a, &b).unwrap();
        for (u, v) in a.edges() {
            assert!(b.has_edge(m[u], m[v]));
        }
    }

    #[test]
    fn path_is_not_cycle() {
        assert!(find_isomorphism(&Graph::path(5), &Graph::cycle(5)).is_none());
        assert!(find_isomorphism(&Graph::path(4), &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])).is_none());
    }
}
