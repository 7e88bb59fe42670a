//! Integer-keyed bucket priority queue.
//!
//! Each bucket is a min-heap of item ids, so among items with equal key the
//! lowest id always comes out first. Re-keying pushes a fresh entry and leaves
//! the old one behind as a tombstone that is discarded when reached.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(Debug, Clone)]
pub struct BucketQueue {
    buckets: Vec<BinaryHeap<Reverse<usize>>>,
    key: Vec<u32>,
    live: Vec<bool>,
    /// Never above the smallest live key.
    lo: usize,
    /// Never below the largest live key.
    hi: usize,
    len: usize,
    pushes: u64,
}

impl BucketQueue {
    /// Empty queue able to hold items `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        BucketQueue {
            buckets: Vec::new(),
            key: vec![0; capacity],
            live: vec![false; capacity],
            lo: usize::MAX,
            hi: 0,
            len: 0,
            pushes: 0,
        }
    }

    /// Queue holding item `i` with key `keys[i]` for every `i`.
    pub fn with_keys(keys: &[u32]) -> Self {
        let mut q = Self::new(keys.len());
        for (i, &k) in keys.iter().enumerate() {
            q.set_key(i, k);
        }
        q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, item: usize) -> bool {
        self.live[item]
    }

    /// Current key of `item`; meaningful while the item is queued and as its
    /// final key after it was popped.
    pub fn key(&self, item: usize) -> u32 {
        self.key[item]
    }

    /// Total number of bucket insertions so far.
    pub fn pushes(&self) -> u64 {
        self.pushes
    }

    /// Inserts `item`, or moves it if already queued.
    pub fn set_key(&mut self, item: usize, key: u32) {
        if !self.live[item] {
            self.live[item] = true;
            self.len += 1;
        } else if self.key[item] == key {
            return;
        }
        self.key[item] = key;
        let b = key as usize;
        if b >= self.buckets.len() {
            self.buckets.resize_with(b + 1, BinaryHeap::new);
        }
        self.buckets[b].push(Reverse(item));
        self.pushes += 1;
        self.lo = self.lo.min(b);
        self.hi = self.hi.max(b);
    }

    pub fn decrement(&mut self, item: usize) {
        debug_assert!(self.live[item] && self.key[item] > 0);
        self.set_key(item, self.key[item] - 1);
    }

    /// Removes the item with the smallest key (lowest id among ties).
    pub fn pop_min(&mut self) -> Option<(usize, u32)> {
        if self.len == 0 {
            return None;
        }
        loop {
            if let Some(item) = self.take_from(self.lo) {
                return Some((item, self.lo as u32));
            }
            self.lo += 1;
        }
    }

    /// Removes the item with the largest key (lowest id among ties).
    pub fn pop_max(&mut self) -> Option<(usize, u32)> {
        if self.len == 0 {
            return None;
        }
        loop {
            if let Some(item) = self.take_from(self.hi) {
                return Some((item, self.hi as u32));
            }
            self.hi -= 1;
        }
    }

    fn take_from(&mut self, b: usize) -> Option<usize> {
        let heap = &mut self.buckets[b];
        while let Some(Reverse(item)) = heap.pop() {
            if self.live[item] && self.key[item] as usize == b {
                self.live[item] = false;
                self.len -= 1;
                return Some(item);
            }
        }
        None
    }
}
