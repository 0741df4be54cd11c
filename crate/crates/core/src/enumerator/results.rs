use super::leftmost::ActivityTable;
use crate::error::{Error, Result};
use crate::opcore::is_op_isomorphic;
use crate::radix::{bits_for, radix_sort_by_key, radix_sort_packed};
use crate::sequence::Sequence;
use crate::suffix_tree::FingerprintIndex;

const NONE: u32 = u32::MAX;
const EMPTY: (u32, u32) = (0, 0);

/// Sort buffer of `(key, payload)` tuples, packed into single words when
/// both fit in 64 bits.
enum Tuples {
    Packed {
        key_bits: u32,
        payload_bits: u32,
        words: Vec<u64>,
    },
    Pairs {
        key_bits: u32,
        pairs: Vec<(u64, u32)>,
    },
}

impl Tuples {
    fn new(key_bits: u32, payload_bits: u32) -> Self {
        if key_bits + payload_bits <= 64 {
            Tuples::Packed {
                key_bits,
                payload_bits,
                words: Vec::new(),
            }
        } else {
            Tuples::Pairs {
                key_bits,
                pairs: Vec::new(),
            }
        }
    }

    #[inline]
    fn push(&mut self, key: u64, payload: u32) {
        match self {
            Tuples::Packed {
                payload_bits,
                words,
                ..
            } => words.push((key << *payload_bits) | payload as u64),
            Tuples::Pairs { pairs, .. } => pairs.push((key, payload)),
        }
    }

    fn len(&self) -> usize {
        match self {
            Tuples::Packed { words, .. } => words.len(),
            Tuples::Pairs { pairs, .. } => pairs.len(),
        }
    }

    fn sort(&mut self) {
        match self {
            Tuples::Packed {
                key_bits,
                payload_bits,
                words,
            } => radix_sort_packed(words, *key_bits, *payload_bits),
            Tuples::Pairs { key_bits, pairs } => radix_sort_by_key(pairs, *key_bits),
        }
    }

    #[inline]
    fn get(&self, idx: usize) -> (u64, u32) {
        match self {
            Tuples::Packed {
                payload_bits,
                words,
                ..
            } => {
                let w = words[idx];
                (w >> *payload_bits, (w & ((1u64 << *payload_bits) - 1)) as u32)
            }
            Tuples::Pairs { pairs, .. } => pairs[idx],
        }
    }
}

/// Fragment length of a result cell at scale `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    /// `2^{k-1}`.
    Half,
    /// `2^k`.
    Full,
}

impl Scale {
    pub fn length(self, k: u32) -> usize {
        match self {
            Scale::Half => 1 << (k - 1),
            Scale::Full => 1 << k,
        }
    }

    fn offset(self) -> u32 {
        match self {
            Scale::Half => 0,
            Scale::Full => 1,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    start: u32,
    len: u32,
    /// Offset of the `Half` cells; `Full` cells follow them. `NONE` at k=0.
    cells: u32,
}

/// `R[x][k][i']` for both scales: the fragment starts `y` with
/// `x ∈ [y, y+L-1]` and `w[i'..i'+L-1] ≈ w[y..y+L-1]`, where `L` is the scale
/// length and `i'` ranges over the `k`-active range of `x`.
///
/// Cells and list entries live in flat arenas; a cell holds the bounds of
/// its list, and cells of one fingerprint class share a single list.
#[derive(Debug, Clone)]
pub struct ResultIndex {
    n: usize,
    slot_base: Vec<u32>,
    slots: Vec<Slot>,
    cells: Vec<(u32, u32)>,
    lists: usize,
    ys: Vec<u32>,
    tuple_count: usize,
}

/// Size counters of a [`ResultIndex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ResultStats {
    pub cells: usize,
    pub lists: usize,
    pub list_entries: usize,
    pub tuples: usize,
}

impl ResultIndex {
    pub fn build(activity: &ActivityTable, fp: &FingerprintIndex) -> Self {
        let n = activity.text_len();
        let mut slot_base = Vec::with_capacity(n + 2);
        let mut slots = Vec::new();
        let mut cell_count = 0usize;
        slot_base.push(0);
        for p in 1..=n {
            slot_base.push(slots.len() as u32);
            for r in activity.ranges(p) {
                let cells = if r.k == 0 {
                    NONE
                } else {
                    let at = cell_count as u32;
                    cell_count += 2 * r.len();
                    at
                };
                slots.push(Slot {
                    start: r.start as u32,
                    len: r.len() as u32,
                    cells,
                });
            }
        }
        slot_base.push(slots.len() as u32);

        let fp_range = fp.id_range() + 1;
        let group_count = 2 * slots.len() as u64;
        let key_bits = bits_for(((group_count * fp_range) << 1) | 1);
        assert!(key_bits <= 64, "text too long for packed result keys");
        let mut tuples = Tuples::new(key_bits, bits_for(n as u64));

        for (p, &base) in slot_base.iter().enumerate().take(n + 1).skip(1) {
            for k in 1..=activity.max_scale(p) {
                let slot_id = base as usize + k as usize;
                let slot = slots[slot_id];
                for scale in [Scale::Half, Scale::Full] {
                    let len = scale.length(k);
                    if slot.start as usize + len - 1 > n {
                        // no i' in the range has a fitting pattern
                        continue;
                    }
                    let group = (2 * slot_id as u64 + scale.offset() as u64) * fp_range;
                    let ys = (p + 1).saturating_sub(len).max(1)..=p.min(n + 1 - len);
                    for y in ys {
                        let f = fp.fingerprint_unchecked(y, len);
                        tuples.push((group + f) << 1, y as u32);
                    }
                    let starts = slot.start as usize..(slot.start + slot.len) as usize;
                    for i2 in starts.filter(|&i2| i2 + len - 1 <= n) {
                        let f = fp.fingerprint_unchecked(i2, len);
                        tuples.push(((group + f) << 1) | 1, i2 as u32);
                    }
                }
            }
        }
        let tuple_count = tuples.len();
        tuples.sort();

        let mut cells = vec![EMPTY; cell_count];
        let mut lists = 0;
        let mut ys = Vec::new();
        let mut at = 0;
        while at < tuple_count {
            // within a class, y tuples (tag 0) sort before i' tuples (tag 1)
            let class = tuples.get(at).0 >> 1;
            let mut split = at;
            while split < tuple_count && tuples.get(split).0 == class << 1 {
                split += 1;
            }
            let mut end = split;
            while end < tuple_count && tuples.get(end).0 == (class << 1) | 1 {
                end += 1;
            }
            if split > at && end > split {
                lists += 1;
                let list = (ys.len() as u32, (ys.len() + split - at) as u32);
                ys.extend((at..split).map(|idx| tuples.get(idx).1));
                let group = class / fp_range;
                let slot = slots[(group / 2) as usize];
                let half = slot.cells + (group % 2) as u32 * slot.len;
                for idx in split..end {
                    cells[(half + tuples.get(idx).1 - slot.start) as usize] = list;
                }
            }
            at = end;
        }

        Self {
            n,
            slot_base,
            slots,
            cells,
            lists,
            ys,
            tuple_count,
        }
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    /// `R[p][k][i]` at the given scale; empty when `i` is outside the
    /// `k`-active range of `p`, when `k = 0`, or when no fragment matches.
    pub fn lookup(&self, p: usize, k: u32, i: usize, scale: Scale) -> &[u32] {
        if p == 0 || p > self.n || k == 0 {
            return &[];
        }
        let slot_id = self.slot_base[p] as usize + k as usize;
        if slot_id >= self.slot_base[p + 1] as usize {
            return &[];
        }
        let slot = self.slots[slot_id];
        let offset = match (i as u32).checked_sub(slot.start) {
            Some(d) if d < slot.len => d,
            _ => return &[],
        };
        let (start, end) = self.cells[(slot.cells + scale.offset() * slot.len + offset) as usize];
        &self.ys[start as usize..end as usize]
    }

    pub fn stats(&self) -> ResultStats {
        ResultStats {
            cells: self.cells.len(),
            lists: self.lists,
            list_entries: self.ys.len(),
            tuples: self.tuple_count,
        }
    }

    /// Checks every stored `y` against its membership and isomorphism
    /// conditions by direct comparison. Returns the number of checked pairs.
    pub fn audit(&self, s: &Sequence) -> Result<usize> {
        let w = s.as_slice();
        let mut checked = 0;
        for p in 1..=self.n {
            let (a, b) = (self.slot_base[p] as usize, self.slot_base[p + 1] as usize);
            for (k, slot) in self.slots[a..b].iter().enumerate().skip(1) {
                let k = k as u32;
                for scale in [Scale::Half, Scale::Full] {
                    let len = scale.length(k);
                    for i2 in slot.start..slot.start + slot.len {
                        let i2 = i2 as usize;
                        for &y in self.lookup(p, k, i2, scale) {
                            let y = y as usize;
                            let covers = y <= p && p < y + len;
                            let fits = y + len - 1 <= self.n && i2 + len - 1 <= self.n;
                            if !covers
                                || !fits
                                || !is_op_isomorphic(&w[i2 - 1..i2 - 1 + len], &w[y - 1..y - 1 + len])
                            {
                                return Err(Error::BoundViolation(format!(
                                    "R[{p}][{k}][{i2}] ({scale:?}) holds y={y}"
                                )));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        Ok(checked)
    }
}
