use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::Result;

type Producer<K, V> = dyn Fn(&K) -> Result<V> + Send + Sync;

/// A shared, lazily evaluated map `K -> V`. Successful results are cached;
/// the producer must be deterministic so caching is unobservable.
pub struct Memo<K, V> {
    producer: Box<Producer<K, V>>,
    cache: Mutex<HashMap<K, V>>,
}

impl<K, V> Memo<K, V>
where
    K: Eq + Hash + Clone + Send,
    V: Clone + Send,
{
    pub fn new(producer: impl Fn(&K) -> Result<V> + Send + Sync + 'static) -> Arc<Self> {
        Arc::new(Memo {
            producer: Box::new(producer),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn get(&self, key: &K) -> Result<V> {
        if let Some(v) = self.cache.lock().expect("memo lock poisoned").get(key) {
            return Ok(v.clone());
        }
        // evaluated outside the lock so producers may recurse into other memos
        let v = (self.producer)(key)?;
        self.cache
            .lock()
            .expect("memo lock poisoned")
            .entry(key.clone())
            .or_insert_with(|| v.clone());
        Ok(v)
    }
}
