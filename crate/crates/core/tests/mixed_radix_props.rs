use harmpack::mixed_radix::{bflip, compose, decompose, flip, BaseVector, DigitString};
use proptest::prelude::*;

/// Digit-level definition: reverse the first k digits, evaluate in bflip(b, k).
fn flip_by_digits(y: u64, k: usize, base: &BaseVector) -> u64 {
    let mut digits = decompose(y, base).unwrap().digits().to_vec();
    digits[..k].reverse();
    let flipped = bflip(base, k).unwrap();
    let mut value = 0;
    let mut place = 1;
    for (d, b) in digits.iter().zip(flipped.radices()) {
        value += d * place;
        place *= b;
    }
    value
}

fn bit_reverse(y: u64, bits: usize) -> u64 {
    (0..bits).fold(0, |acc, i| acc | (((y >> i) & 1) << (bits - 1 - i)))
}

fn base_strategy() -> impl Strategy<Value = BaseVector> {
    prop::collection::vec(1u64..=6, 1..=6).prop_map(|r| BaseVector::new(r).unwrap())
}

fn base_value_level() -> impl Strategy<Value = (BaseVector, u64, usize)> {
    base_strategy().prop_flat_map(|b| {
        let h = b.hyper();
        let r = b.len();
        (Just(b), 0..h, 1..=r)
    })
}

#[test]
fn frozen_examples() {
    let b = BaseVector::new(vec![2, 3]).unwrap();
    assert_eq!(flip_by_digits(1, 2, &b), 3);
    assert_eq!(flip(1, 2, &b).unwrap(), 3);
    assert_eq!(bit_reverse(3, 3), 6);
}

#[test]
fn power_of_two_flip_is_bit_reversal() {
    for bits in 1..=10 {
        let b = BaseVector::new(vec![2; bits]).unwrap();
        for y in 0..b.hyper() {
            assert_eq!(flip(y, bits, &b).unwrap(), bit_reverse(y, bits));
        }
    }
}

proptest! {
    #[test]
    fn flip_matches_digit_definition((b, y, k) in base_value_level()) {
        prop_assert_eq!(flip(y, k, &b).unwrap(), flip_by_digits(y, k, &b));
    }

    #[test]
    fn flip_round_trips((b, y, k) in base_value_level()) {
        let f = flip(y, k, &b).unwrap();
        prop_assert!(f < b.hyper());
        prop_assert_eq!(flip(f, k, &bflip(&b, k).unwrap()).unwrap(), y);
    }

    #[test]
    fn flip_steps((b, y, k) in base_value_level()) {
        let step = b.partial_product(k - 1).unwrap();
        let digit = decompose(y, &b).unwrap().digits()[k - 1];
        let f = flip(y, k, &b).unwrap();
        if digit + 1 < b.radix(k).unwrap() {
            prop_assert_eq!(flip(y + step, k, &b).unwrap(), f + 1);
        }
        if digit > 0 {
            prop_assert_eq!(flip(y - step, k, &b).unwrap(), f - 1);
        }
    }

    #[test]
    fn prefix_range_preserved((b, y, k) in base_value_level()) {
        let block = b.partial_product(k).unwrap();
        if y < block {
            prop_assert!(flip(y, k, &b).unwrap() < block);
        }
    }

    #[test]
    fn bflip_involution_keeps_prefix_product((b, _y, k) in base_value_level()) {
        let once = bflip(&b, k).unwrap();
        prop_assert_eq!(once.partial_product(k).unwrap(), b.partial_product(k).unwrap());
        prop_assert_eq!(bflip(&once, k).unwrap(), b);
    }

    #[test]
    fn compose_inverts_decompose((b, y, _k) in base_value_level()) {
        let d = decompose(y, &b).unwrap();
        prop_assert!(d.digits().iter().zip(b.radices()).all(|(d, r)| d < r));
        prop_assert_eq!(compose(&d), y);
        let rebuilt = DigitString::new(d.digits().to_vec(), b.clone()).unwrap();
        prop_assert_eq!(decompose(compose(&rebuilt), &b).unwrap(), rebuilt);
    }
}
