//! Data-parallel dispatch helpers.
//!
//! With the `parallel` feature (default) hot loops fan out over rayon;
//! without it the same closures run on a plain sequential iterator. Each
//! output element is written by exactly one closure invocation and the
//! accumulation order inside an element never changes, so results are
//! bitwise identical regardless of thread count or feature selection.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many output elements the rayon fan-out costs more than it buys.
const MIN_PARALLEL_LEN: usize = 4096;

/// Applies `f(chunk_index, chunk)` over disjoint `chunk`-sized slices of `data`.
pub fn for_each_chunk_mut<F>(data: &mut [f64], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if data.len() >= MIN_PARALLEL_LEN {
            data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
            return;
        }
    }
    seq_for_each_chunk_mut(data, chunk, f);
}

/// Sequential twin of [`for_each_chunk_mut`]; always single threaded.
/// Also the fallback body when the `parallel` feature is disabled.
pub fn seq_for_each_chunk_mut<F>(data: &mut [f64], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f64]),
{
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

/// Ordered map over a slice; parallel when available. Output order always
/// matches input order, so downstream reductions stay deterministic.
pub fn map_indexed<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_matches_sequential() {
        let mut a = vec![0.0; 10_000];
        let mut b = vec![0.0; 10_000];
        let fill = |i: usize, c: &mut [f64]| {
            for (j, v) in c.iter_mut().enumerate() {
                *v = (i * 31 + j) as f64 * 0.5;
            }
        };
        for_each_chunk_mut(&mut a, 17, fill);
        seq_for_each_chunk_mut(&mut b, 17, fill);
        assert_eq!(a, b);
    }

    #[test]
    fn map_indexed_preserves_order() {
        let items: Vec<usize> = (0..5000).collect();
        let out = map_indexed(&items, |i, &x| i as f64 + x as f64);
        for (i, v) in out.iter().enumerate() {
            assert_eq!(*v, 2.0 * i as f64);
        }
    }
}
