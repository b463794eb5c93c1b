use crate::subword::PositionSet;

/// Facets of the cyclic polytope with `2k + m` vertices in dimension `2k`,
/// by Gale's evenness condition: `2k`-subsets in which any two
/// non-members are separated by an even number of members. Positions are
/// 0-based and sorted lexicographically.
pub fn gale_facets_rank2(m: usize, k: usize) -> Vec<PositionSet> {
    let len = 2 * k + m;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    subsets(len, 2 * k, 0, &mut chosen, &mut |set| {
        let s = PositionSet::from_positions(set.iter().copied());
        let outside: Vec<usize> = (0..len).filter(|&p| !s.contains(p)).collect();
        if outside.windows(2).all(|w| (w[1] - w[0] - 1) % 2 == 0) {
            out.push(s);
        }
    });
    out.sort();
    out
}

fn subsets(len: usize, size: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for p in start..len {
        if len - p < size - chosen.len() {
            break;
        }
        chosen.push(p);
        subsets(len, size, p + 1, chosen, visit);
        chosen.pop();
    }
}
