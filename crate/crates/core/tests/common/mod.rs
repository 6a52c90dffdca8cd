#![allow(dead_code)]

use std::collections::HashSet;

use fpoly::complex::{random_complex, SimplicialComplex};
use itertools::Itertools;
use num_rational::Ratio;

/// Permutations of `[d]` counted by descents.
pub fn eulerian_by_descents(d: usize) -> Vec<u64> {
    let mut counts = vec![0u64; d];
    for p in (0..d).permutations(d) {
        counts[p.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
    }
    counts
}

/// Set partitions of `[d]` counted by number of blocks minus one, through
/// restricted growth strings.
pub fn stirling_by_blocks(d: usize) -> Vec<u64> {
    let mut counts = vec![0u64; d];
    fn extend(s: &mut Vec<usize>, d: usize, counts: &mut [u64]) {
        if s.len() == d {
            counts[*s.iter().max().unwrap()] += 1;
            return;
        }
        let m = s.iter().max().map_or(0, |x| x + 1);
        for b in 0..=m {
            s.push(b);
            extend(s, d, counts);
            s.pop();
        }
    }
    extend(&mut vec![0], d, &mut counts);
    counts
}

/// Derangements of `[n]` counted by exceedances `i < p(i)`.
pub fn derangements_by_exceedances(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    for p in (0..n).permutations(n) {
        if p.iter().enumerate().any(|(i, &v)| i == v) {
            continue;
        }
        counts[p.iter().enumerate().filter(|&(i, &v)| v > i).count()] += 1;
    }
    counts
}

/// Shadow sizes of the first `m` colex k-subsets for `m = 0..=max_m`,
/// computed incrementally.
pub fn colex_shadow_sizes(k: usize, max_m: usize) -> Vec<u64> {
    let mut shadow: HashSet<Vec<usize>> = HashSet::new();
    let mut sizes = vec![0u64];
    for s in fpoly::combinatorics::ColexSubsets::new(k).take(max_m) {
        for skip in 0..k {
            let mut t = s.clone();
            t.remove(skip);
            shadow.insert(t);
        }
        sizes.push(shadow.len() as u64);
    }
    sizes
}

/// A reproducible family of random complexes on up to 12 vertices.
pub fn sample_complexes(count: usize) -> Vec<SimplicialComplex> {
    let densities = [Ratio::new(1, 5), Ratio::new(1, 4), Ratio::new(1, 3), Ratio::new(1, 2)];
    (0..count)
        .map(|i| {
            let n = 1 + i % 12;
            random_complex(n, densities[i % densities.len()], 1000 + i as u64, 4).unwrap()
        })
        .collect()
}

/// Smaller companions for binary constructions.
pub fn sample_partners(count: usize) -> Vec<SimplicialComplex> {
    (0..count)
        .map(|i| random_complex(1 + i % 5, Ratio::new(1, 2), 7000 + i as u64, 3).unwrap())
        .collect()
}
