use crate::error::{Error, Result};

/// A partition of `0..n` into non-empty clusters.
///
/// Cluster ids are canonical: cluster `0` holds vertex `0`, and ids are
/// handed out in order of each cluster's smallest vertex. Two clusterings are
/// therefore equal exactly when they describe the same partition, and the
/// assignment vector is a restricted growth string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering {
    assignment: Vec<usize>,
    clusters: Vec<Vec<usize>>,
}

impl Clustering {
    /// Builds a clustering from arbitrary per-vertex labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let mut assignment = Vec::with_capacity(labels.len());
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        for (v, label) in labels.iter().enumerate() {
            let next = remap.len();
            let id = *remap.entry(label).or_insert(next);
            if id == clusters.len() {
                clusters.push(Vec::new());
            }
            clusters[id].push(v);
            assignment.push(id);
        }
        Clustering {
            assignment,
            clusters,
        }
    }

    /// Builds a clustering from explicit vertex sets, which must partition `0..n`.
    pub fn from_clusters(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::PartitionMismatch {
                    reason: format!("cluster {i} is empty"),
                });
            }
            for &v in set {
                if v >= n {
                    return Err(Error::PartitionMismatch {
                        reason: format!("vertex {v} is outside 0..{n}"),
                    });
                }
                if labels[v] != usize::MAX {
                    return Err(Error::PartitionMismatch {
                        reason: format!("vertex {v} appears in more than one cluster"),
                    });
                }
                labels[v] = i;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::PartitionMismatch {
                reason: format!("vertex {v} is not covered"),
            });
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn single(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    /// Number of clusters.
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn same_cluster(&self, u: usize, v: usize) -> bool {
        self.assignment[u] == self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Clusters as sorted vertex lists, indexed by cluster id.
    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_canonicalized() {
        let c = Clustering::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.assignment(), &[0, 1, 0, 2]);
        assert_eq!(c.clusters(), &[vec![0, 2], vec![1], vec![3]]);
        assert_eq!(c, Clustering::from_labels(&[1, 0, 1, 5]));
    }

    #[test]
    fn from_clusters_validates() {
        let c = Clustering::from_clusters(3, &[vec![2], vec![1, 0]]).unwrap();
        assert_eq!(c.clusters(), &[vec![0, 1], vec![2]]);
        assert!(Clustering::from_clusters(3, &[vec![0, 1]]).is_err());
        assert!(Clustering::from_clusters(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Clustering::from_clusters(2, &[vec![0, 1], vec![]]).is_err());
        assert!(Clustering::from_clusters(2, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn trivial_partitions() {
        assert_eq!(Clustering::singletons(3).len(), 3);
        assert_eq!(Clustering::single(3).len(), 1);
        assert!(Clustering::single(0).is_empty());
    }
}
