//! Brute-force helpers shared by the integration tests. Nothing here calls
//! into the crate's own power-class or group-structure code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cayley_pst::{AbelianGroup, ConnectionSet, GroupElement};

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `n` into non-increasing parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n`, once in elementary-divisor form
/// (prime powers) and once in invariant-factor form.
pub fn presentations_of_order(n: u64) -> Vec<Vec<u64>> {
    let mut per_prime: Vec<Vec<Vec<u64>>> = Vec::new();
    for (p, e) in factorize(n) {
        per_prime.push(partitions(e).into_iter().map(|parts| parts.iter().map(|&k| p.pow(k)).collect()).collect());
    }
    let mut choices: Vec<Vec<Vec<u64>>> = vec![Vec::new()];
    for options in per_prime {
        let mut next = Vec::new();
        for prefix in &choices {
            for opt in &options {
                let mut v = prefix.clone();
                v.push(opt.clone());
                next.push(v);
            }
        }
        choices = next;
    }
    let mut out = BTreeSet::new();
    for choice in choices {
        let elementary: Vec<u64> = choice.iter().flatten().copied().collect();
        if elementary.is_empty() {
            continue;
        }
        let rank = choice.iter().map(Vec::len).max().unwrap();
        let invariant: Vec<u64> = (0..rank)
            .map(|i| choice.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
            .collect();
        out.insert(elementary);
        out.insert(invariant);
    }
    out.into_iter().collect()
}

pub fn group(factors: &[u64]) -> AbelianGroup {
    AbelianGroup::new(factors.to_vec()).unwrap()
}

pub fn groups_up_to(max_order: u64) -> Vec<AbelianGroup> {
    (2..=max_order).flat_map(presentations_of_order).map(|f| group(&f)).collect()
}

/// True iff the Sylow-2-subgroup is cyclic, read off the factor list.
pub fn sylow2_cyclic(factors: &[u64]) -> bool {
    factors.iter().filter(|&&n| n % 2 == 0).count() <= 1
}

pub fn multiples(g: &GroupElement) -> BTreeSet<GroupElement> {
    let mut out = BTreeSet::new();
    let mut x = g.group().identity();
    loop {
        if !out.insert(x.clone()) {
            return out;
        }
        x = &x + g;
    }
}

/// Power-closure by definition: every generator of `<g>` is in the set.
pub fn brute_power_closed(set: &BTreeSet<GroupElement>) -> bool {
    set.iter().all(|g| {
        let span = multiples(g);
        span.iter().filter(|h| multiples(h) == span).all(|h| set.contains(h))
    })
}

/// Classes `{g, -g}` of non-identity elements.
pub fn inverse_orbits(g: &AbelianGroup) -> Vec<Vec<GroupElement>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements().filter(|x| !x.is_identity()) {
        if seen.contains(&x) {
            continue;
        }
        let neg = -&x;
        seen.insert(x.clone());
        seen.insert(neg.clone());
        out.push(if neg == x { vec![x] } else { vec![x, neg] });
    }
    out
}

/// Every inverse-closed identity-free subset, via bit masks over the orbits.
pub fn inverse_closed_subsets(g: &AbelianGroup) -> impl Iterator<Item = ConnectionSet> + '_ {
    let orbits = inverse_orbits(g);
    (0..1u64 << orbits.len()).map(move |mask| {
        let elems = (0..orbits.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| orbits[i].iter().cloned());
        ConnectionSet::new(g, elems).unwrap()
    })
}

/// Element of order two found by search.
pub fn involutions(g: &AbelianGroup) -> Vec<GroupElement> {
    g.elements().filter(|x| !x.is_identity() && (x + x).is_identity()).collect()
}
