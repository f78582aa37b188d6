use crate::graph::{splice_runs, Graph, OrientedCycle};
use crate::two_factor::TwoFactor;

/// First cross edge `xy` whose factor neighbours `x±`, `y±` are adjacent,
/// spliced into one cycle. Returns the merged cycle and the two consumed
/// cycle indices.
pub(super) fn find_cross_merge(g: &Graph, f: &TwoFactor) -> Option<(OrientedCycle, [usize; 2])> {
    for (x, y) in g.edges() {
        let (ci, di) = (f.cycle_of(x), f.cycle_of(y));
        if ci == di {
            continue;
        }
        for (flip_c, flip_d) in [(false, false), (false, true), (true, false), (true, true)] {
            let c = oriented(f.cycle(ci), flip_c);
            let d = oriented(f.cycle(di), flip_d);
            let (xs, ys) = (c.succ(x), d.succ(y));
            if g.has_edge(xs, ys) {
                // x y ←D← y⁺ x⁺ →C→ x
                let cycle = splice_runs(g, &[vec![x], d.arc_back(y, ys), c.arc(xs, c.pred(x))])
                    .expect("cross-edge splice is a cycle");
                return Some((cycle, [ci, di]));
            }
        }
    }
    None
}

fn oriented(c: &OrientedCycle, flip: bool) -> OrientedCycle {
    if flip {
        c.reversed()
    } else {
        c.clone()
    }
}

/// Merges two cycles joined by a cross edge `xy` with `x±y± ∈ E`, if any.
pub fn direct_merge_scan(g: &Graph, f: &TwoFactor) -> Option<TwoFactor> {
    let (cycle, removed) = find_cross_merge(g, f)?;
    Some(
        f.replace(g, &removed, vec![cycle])
            .expect("merge keeps a 2-factor"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn triangles(extra: &[(usize, usize)]) -> (Graph, TwoFactor) {
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        edges.extend_from_slice(extra);
        let g = Graph::from_edge_list(6, edges).unwrap();
        let f = TwoFactor::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2]).unwrap(),
                OrientedCycle::new(&g, vec![3, 4, 5]).unwrap(),
            ],
        )
        .unwrap();
        (g, f)
    }

    #[test]
    fn two_cross_edges_merge() {
        let (g, f) = triangles(&[(0, 3), (1, 4)]);
        let merged = direct_merge_scan(&g, &f).unwrap();
        assert_eq!(merged.omega(), 1);
        assert!(merged.validate(&g, &g.vertex_set()).is_ok());
    }

    #[test]
    fn no_cross_edges_or_one() {
        let (g, f) = triangles(&[]);
        assert!(direct_merge_scan(&g, &f).is_none());
        let (g, f) = triangles(&[(0, 3)]);
        assert!(direct_merge_scan(&g, &f).is_none());
    }

    #[test]
    fn every_pattern_is_found() {
        // 0⁺ = 1, 0⁻ = 2, 3⁺ = 4, 3⁻ = 5
        for second in [(1, 4), (1, 5), (2, 4), (2, 5)] {
            let (g, f) = triangles(&[(0, 3), second]);
            let merged = direct_merge_scan(&g, &f).expect("pattern merges");
            assert_eq!(merged.omega(), 1);
        }
    }

    #[test]
    fn single_cycle_has_nothing_to_merge() {
        let g = named::complete(5);
        let f =
            TwoFactor::new(&g, vec![OrientedCycle::new(&g, (0..5).collect()).unwrap()]).unwrap();
        assert!(direct_merge_scan(&g, &f).is_none());
    }
}
