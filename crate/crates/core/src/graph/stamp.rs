/// Vertex-indexed map with O(1) reset, so that a search touching only a few
/// vertices does not pay for clearing an O(n) array.
#[derive(Clone, Debug, Default)]
pub(crate) struct StampMap {
    stamp: Vec<u32>,
    value: Vec<u32>,
    generation: u32,
}

impl StampMap {
    pub fn new(n: usize) -> Self {
        StampMap {
            stamp: vec![0; n],
            value: vec![0; n],
            generation: 1,
        }
    }

    /// Forgets every entry and makes room for `n` keys.
    pub fn reset(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.value.resize(n, 0);
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
    }

    #[inline]
    pub fn contains(&self, key: usize) -> bool {
        self.stamp.get(key) == Some(&self.generation)
    }

    #[inline]
    pub fn get(&self, key: usize) -> Option<u32> {
        self.contains(key).then(|| self.value[key])
    }

    #[inline]
    pub fn set(&mut self, key: usize, value: u32) {
        self.stamp[key] = self.generation;
        self.value[key] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reset_forgets() {
        let mut m = StampMap::new(4);
        m.set(2, 7);
        assert_eq!(m.get(2), Some(7));
        m.reset(6);
        assert!(!m.contains(2));
        m.set(5, 1);
        assert_eq!(m.get(5), Some(1));
    }

    #[test]
    fn generation_wraparound_clears() {
        let mut m = StampMap::new(2);
        m.generation = u32::MAX;
        m.set(0, 3);
        m.reset(2);
        assert!(!m.contains(0));
        assert_eq!(m.generation, 1);
    }
}
