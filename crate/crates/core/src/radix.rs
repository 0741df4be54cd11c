//! LSD radix sort for fixed-width integer keys.

const DIGIT_BITS: u32 = 8;
const BUCKETS: usize = 1 << DIGIT_BITS;

/// Stable sort of `items` by the low `key_bits` bits of `key(item)`.
///
/// Runs in O((n + 2^8) · ⌈key_bits / 8⌉); digits on which all keys agree
/// are skipped.
pub fn radix_sort_with<T: Copy + Default>(items: &mut Vec<T>, key_bits: u32, key: impl Fn(&T) -> u64) {
    if items.len() < 2 || key_bits == 0 {
        return;
    }
    let passes = key_bits.div_ceil(DIGIT_BITS) as usize;
    let mut counts = vec![[0usize; BUCKETS]; passes];
    for item in items.iter() {
        let k = key(item);
        for (pass, hist) in counts.iter_mut().enumerate() {
            hist[((k >> (pass as u32 * DIGIT_BITS)) as usize) & (BUCKETS - 1)] += 1;
        }
    }
    let mut buffer = vec![T::default(); items.len()];
    for (pass, hist) in counts.iter_mut().enumerate() {
        // every key shares this digit: the pass would not move anything
        if hist.contains(&items.len()) {
            continue;
        }
        let mut total = 0;
        for c in hist.iter_mut() {
            let here = *c;
            *c = total;
            total += here;
        }
        let shift = pass as u32 * DIGIT_BITS;
        for item in items.iter() {
            let bucket = ((key(item) >> shift) as usize) & (BUCKETS - 1);
            buffer[hist[bucket]] = *item;
            hist[bucket] += 1;
        }
        std::mem::swap(items, &mut buffer);
    }
}

/// Stable sort of `(key, payload)` pairs by the low `key_bits` bits of key.
pub fn radix_sort_by_key(items: &mut Vec<(u64, u32)>, key_bits: u32) {
    radix_sort_with(items, key_bits, |&(k, _)| k);
}

/// Sort of packed words `key << payload_bits | payload` by key alone.
pub fn radix_sort_packed(items: &mut Vec<u64>, key_bits: u32, payload_bits: u32) {
    radix_sort_with(items, key_bits, |&x| x >> payload_bits);
}

/// Number of bits needed to represent `max`.
pub fn bits_for(max: u64) -> u32 {
    u64::BITS - max.leading_zeros()
}
