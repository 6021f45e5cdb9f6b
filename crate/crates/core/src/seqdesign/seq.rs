//! Elementary operations on DNA sequences over `{A, C, G, T}`.

use super::SeqError;

fn complement(b: u8) -> Option<u8> {
    Some(match b {
        b'A' => b'T',
        b'T' => b'A',
        b'C' => b'G',
        b'G' => b'C',
        _ => return None,
    })
}

/// Watson-Crick reverse complement.
pub fn revcomp(s: &str) -> Result<String, SeqError> {
    s.bytes().rev().map(|b| complement(b).map(char::from).ok_or(SeqError::InvalidBase(char::from(b)))).collect()
}

/// Reverse complement of a sequence already known to be valid.
pub(crate) fn revcomp_bytes(s: &[u8]) -> Vec<u8> {
    s.iter().rev().map(|&b| complement(b).unwrap_or(b'N')).collect()
}

pub fn hamming(x: &str, y: &str) -> Result<usize, SeqError> {
    if x.len() != y.len() {
        return Err(SeqError::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(x.bytes().zip(y.bytes()).filter(|(a, b)| a != b).count())
}

/// Hamming distance, stopping early once it reaches `cap`.
pub(crate) fn hamming_capped(x: &[u8], y: &[u8], cap: usize) -> usize {
    let mut d = 0;
    for (a, b) in x.iter().zip(y) {
        if a != b {
            d += 1;
            if d >= cap {
                break;
            }
        }
    }
    d
}

pub fn gc_fraction(s: &str) -> Result<f64, SeqError> {
    if s.is_empty() {
        return Err(SeqError::EmptySequence);
    }
    let gc = s.bytes().filter(|b| matches!(b, b'G' | b'C')).count();
    Ok(gc as f64 / s.len() as f64)
}

/// Length of the longest homopolymer run.
pub fn longest_run(s: &[u8]) -> usize {
    let mut best = 0;
    let mut run = 0;
    let mut prev = None;
    for &b in s {
        run = if prev == Some(b) { run + 1 } else { 1 };
        prev = Some(b);
        best = best.max(run);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn revcomp_examples() {
        assert_eq!(revcomp("ACGT").unwrap(), "ACGT");
        assert_eq!(revcomp("AAA").unwrap(), "TTT");
        assert_eq!(revcomp("GATTC").unwrap(), "GAATC");
        assert_eq!(revcomp("ACNT"), Err(SeqError::InvalidBase('N')));
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming("AAAA", "AAAA").unwrap(), 0);
        assert_eq!(hamming("AAAA", "TTTT").unwrap(), 4);
        assert_eq!(hamming("ACGT", "ACGA").unwrap(), 1);
        assert_eq!(hamming("ACG", "AC"), Err(SeqError::LengthMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn gc_examples() {
        assert_eq!(gc_fraction("GGCC").unwrap(), 1.0);
        assert_eq!(gc_fraction("ATAT").unwrap(), 0.0);
        assert_eq!(gc_fraction("ATGC").unwrap(), 0.5);
        assert_eq!(gc_fraction(""), Err(SeqError::EmptySequence));
    }

    #[test]
    fn runs() {
        assert_eq!(longest_run(b""), 0);
        assert_eq!(longest_run(b"ACGT"), 1);
        assert_eq!(longest_run(b"AACCCGT"), 3);
    }

    fn dna(len: usize) -> impl Strategy<Value = String> {
        proptest::collection::vec(prop::sample::select(vec!['A', 'C', 'G', 'T']), len)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn revcomp_is_an_involution(s in (0usize..40).prop_flat_map(dna)) {
            prop_assert_eq!(revcomp(&revcomp(&s).unwrap()).unwrap(), s);
        }

        #[test]
        fn hamming_is_a_metric((x, y, z) in (1usize..30).prop_flat_map(|n| (dna(n), dna(n), dna(n)))) {
            let xy = hamming(&x, &y).unwrap();
            prop_assert_eq!(xy, hamming(&y, &x).unwrap());
            prop_assert_eq!(hamming(&x, &x).unwrap(), 0);
            prop_assert!(hamming(&x, &z).unwrap() <= xy + hamming(&y, &z).unwrap());
        }

        #[test]
        fn revcomp_preserves_distance((x, y) in (1usize..30).prop_flat_map(|n| (dna(n), dna(n)))) {
            prop_assert_eq!(
                hamming(&revcomp(&x).unwrap(), &revcomp(&y).unwrap()).unwrap(),
                hamming(&x, &y).unwrap()
            );
        }
    }
}
