//! Enumeration of anonymous preference profiles.
//!
//! Every shipped rule is anonymous, so the search universe is the set of
//! multisets of the m! strict orders rather than ordered vote sequences.
//! Profiles enumerate in a fixed canonical order: orders are ranked
//! lexicographically, and a profile is a non-decreasing sequence of order
//! ranks (combinations with repetition, lexicographic).

use itertools::Itertools;

use crate::election::{Election, PreferenceOrder};

/// All strict orders over `m` candidates, lexicographically by id sequence.
pub fn all_orders(m: usize) -> Vec<PreferenceOrder> {
    (0..m)
        .permutations(m)
        .map(|p| PreferenceOrder::new(p, m).expect("permutations are valid"))
        .collect()
}

/// An anonymous profile: non-decreasing ranks into `all_orders(m)`.
pub type ProfileIndex = Vec<usize>;

/// All anonymous profiles with exactly `n` voters over `m` candidates, in
/// canonical order.
pub fn anonymous_profiles(m: usize, n: usize) -> Vec<ProfileIndex> {
    let order_count = (1..=m).product::<usize>();
    (0..order_count).combinations_with_replacement(n).collect()
}

/// Materializes a profile as an election with letter labels.
pub fn election_from_profile(m: usize, orders: &[PreferenceOrder], profile: &[usize]) -> Election {
    let votes = profile.iter().map(|&i| orders[i].clone()).collect();
    Election::with_letter_labels(m, votes).expect("profiles are non-empty")
}

/// All ways to split a profile into two non-empty halves `(left, right)`.
/// Splitting the multiset of votes covers every consistency pair whose
/// concatenation is the given profile, up to voter order, which anonymous
/// rules cannot see.
pub fn binary_splits(profile: &[usize]) -> Vec<(ProfileIndex, ProfileIndex)> {
    // Group into (order, count) classes.
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for &o in profile {
        match classes.last_mut() {
            Some((order, count)) if *order == o => *count += 1,
            _ => classes.push((o, 1)),
        }
    }
    let mut splits = Vec::new();
    let mut take = vec![0usize; classes.len()];
    loop {
        let left: ProfileIndex = classes
            .iter()
            .zip(&take)
            .flat_map(|(&(o, _), &t)| std::iter::repeat(o).take(t))
            .collect();
        let right: ProfileIndex = classes
            .iter()
            .zip(&take)
            .flat_map(|(&(o, c), &t)| std::iter::repeat(o).take(c - t))
            .collect();
        if !left.is_empty() && !right.is_empty() {
            splits.push((left, right));
        }
        // Odometer increment over 0..=count per class.
        let mut i = 0;
        loop {
            if i == classes.len() {
                return splits;
            }
            if take[i] < classes[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_enumeration_is_lexicographic() {
        let orders = all_orders(3);
        assert_eq!(orders.len(), 6);
        assert_eq!(orders[0].ranking(), &[0, 1, 2]);
        assert_eq!(orders[5].ranking(), &[2, 1, 0]);
    }

    #[test]
    fn profile_counts_match_multiset_coefficients() {
        // C(6 + n - 1, n) anonymous profiles over 3 candidates.
        assert_eq!(anonymous_profiles(3, 1).len(), 6);
        assert_eq!(anonymous_profiles(3, 2).len(), 21);
        assert_eq!(anonymous_profiles(3, 3).len(), 56);
        assert_eq!(anonymous_profiles(2, 4).len(), 5);
    }

    #[test]
    fn splits_cover_all_submultisets() {
        // Profile {0, 0, 1}: the count odometer has 3*2 states, minus the
        // empty and full splits.
        let splits = binary_splits(&[0, 0, 1]);
        assert_eq!(splits.len(), 4);
        assert!(splits.contains(&(vec![0], vec![0, 1])));
        assert!(splits.contains(&(vec![0, 0], vec![1])));
        assert!(splits.contains(&(vec![1], vec![0, 0])));
        assert!(splits.contains(&(vec![0, 1], vec![0])));
    }
}
