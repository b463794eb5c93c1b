//! Python bindings. Generators and word positions are 1-based, as in the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use subwordlab::coxeter::{CoxeterSystem, Word};
use subwordlab::{multicluster, quiver, sorting, subword, PositionSet};

fn err(e: subwordlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn one_based(w: &Word) -> Vec<usize> {
    w.iter().map(|&s| s + 1).collect()
}

fn positions(p: PositionSet) -> Vec<usize> {
    p.to_one_based()
}

#[pyclass(name = "CoxeterSystem", frozen)]
struct PyCoxeterSystem {
    inner: CoxeterSystem,
}

impl PyCoxeterSystem {
    fn word(&self, letters: Vec<usize>) -> PyResult<Word> {
        if letters.contains(&0) {
            return Err(PyValueError::new_err("generators are numbered from 1"));
        }
        let w = Word::from_one_based(&letters);
        self.inner.check_word(&w).map_err(err)?;
        Ok(w)
    }

    fn coxeter_word(&self, c: Option<Vec<usize>>) -> PyResult<Word> {
        match c {
            Some(c) => {
                let c = self.word(c)?;
                self.inner.check_coxeter_word(&c).map_err(err)?;
                Ok(c)
            }
            None => Ok(self.inner.standard_coxeter_word()),
        }
    }
}

#[pymethods]
impl PyCoxeterSystem {
    /// A finite Coxeter system from a type name such as "A3", "H4" or "I2(5)".
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyCoxeterSystem { inner: CoxeterSystem::from_name(name).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.descriptor().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn coxeter_number(&self) -> usize {
        self.inner.coxeter_number()
    }

    #[getter]
    fn num_positive_roots(&self) -> usize {
        self.inner.num_positive_roots()
    }

    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().to_vec()
    }

    fn psi(&self, s: usize) -> PyResult<usize> {
        if s == 0 || s > self.inner.rank() {
            return Err(PyValueError::new_err(format!("no generator s{s}")));
        }
        Ok(self.inner.psi(s - 1) + 1)
    }

    fn coxeter_words(&self) -> Vec<Vec<usize>> {
        self.inner.enumerate_coxeter_words().iter().map(one_based).collect()
    }

    fn is_reduced(&self, word: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_reduced(&self.word(word)?))
    }

    fn length(&self, word: Vec<usize>) -> PyResult<usize> {
        Ok(self.inner.element_from_word(&self.word(word)?).length())
    }

    fn reduced_word(&self, word: Vec<usize>) -> PyResult<Vec<usize>> {
        let e = self.inner.element_from_word(&self.word(word)?);
        Ok(one_based(&self.inner.reduced_word(&e)))
    }

    fn demazure_product(&self, word: Vec<usize>) -> PyResult<Vec<usize>> {
        let e = self.inner.demazure_product(&self.word(word)?);
        Ok(one_based(&self.inner.reduced_word(&e)))
    }

    fn longest_word(&self) -> Vec<usize> {
        one_based(&self.inner.reduced_word(self.inner.longest_element()))
    }

    fn equal_up_to_commutations(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.equal_up_to_commutations(&self.word(a)?, &self.word(b)?))
    }

    /// The c-sorting word of w0.
    #[pyo3(signature = (c=None))]
    fn sorting_word(&self, c: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        Ok(one_based(&sorting::w0_word(&self.inner, &self.coxeter_word(c)?).map_err(err)?))
    }

    /// Occurrences of each generator in the c-sorting word of w0.
    #[pyo3(signature = (c=None))]
    fn phi(&self, c: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        sorting::phi_counts(&self.inner, &self.coxeter_word(c)?).map_err(err)
    }

    fn has_sin_property(&self, word: Vec<usize>) -> PyResult<bool> {
        Ok(sorting::has_sin_property(&self.inner, &self.word(word)?))
    }

    /// `(c, k)` when the word is commutation-equal to c^k w0(c), else None.
    fn recognize(&self, word: Vec<usize>) -> PyResult<Option<(Vec<usize>, usize)>> {
        let found = sorting::recognize_multi_cluster_word(&self.inner, &self.word(word)?);
        Ok(found.map(|(c, k)| (one_based(&c), k)))
    }

    #[pyo3(signature = (k, c=None))]
    fn multi_cluster_word(&self, k: usize, c: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        Ok(one_based(&multicluster::multi_cluster_word(&self.inner, &self.coxeter_word(c)?, k).map_err(err)?))
    }

    #[pyo3(signature = (k, c=None))]
    fn multi_cluster_complex(&self, k: usize, c: Option<Vec<usize>>) -> PyResult<PySubwordComplex> {
        let c = self.coxeter_word(c)?;
        let cx = multicluster::multi_cluster_complex(&self.inner, &c, k).map_err(err)?;
        Ok(PySubwordComplex { system: self.inner.clone(), inner: cx })
    }

    /// The subword complex of a word with target w0.
    fn subword_complex(&self, word: Vec<usize>) -> PyResult<PySubwordComplex> {
        let cx = subword::SubwordComplex::with_w0(&self.inner, self.word(word)?).map_err(err)?;
        Ok(PySubwordComplex { system: self.inner.clone(), inner: cx })
    }

    /// Θ on the letters of c^k w0(c), as a list of 1-based images.
    #[pyo3(signature = (k, c=None))]
    fn theta(&self, k: usize, c: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        let perm = multicluster::theta_permutation(&self.inner, &self.coxeter_word(c)?, k).map_err(err)?;
        Ok(perm.into_iter().map(|p| p + 1).collect())
    }

    #[pyo3(signature = (c=None))]
    fn almost_positive_labels(&self, c: Option<Vec<usize>>) -> PyResult<Vec<String>> {
        let labels = multicluster::lr_labels(&self.inner, &self.coxeter_word(c)?).map_err(err)?;
        Ok(labels.iter().map(|b| b.display(&self.inner).to_string()).collect())
    }

    /// Number of mesh sites checked; raises when the relation fails.
    fn check_mesh_relation(&self, word: Vec<usize>) -> PyResult<usize> {
        quiver::check_mesh_relation(&self.inner, &self.word(word)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem('{}')", self.inner.descriptor())
    }
}

#[pyclass(name = "SubwordComplex", frozen)]
struct PySubwordComplex {
    system: CoxeterSystem,
    inner: subword::SubwordComplex,
}

impl PySubwordComplex {
    fn set(&self, p: Vec<usize>) -> PyResult<PositionSet> {
        PositionSet::from_one_based(&p, self.inner.word().len()).map_err(err)
    }
}

#[pymethods]
impl PySubwordComplex {
    #[getter]
    fn word(&self) -> Vec<usize> {
        one_based(self.inner.word())
    }

    #[getter]
    fn num_facets(&self) -> usize {
        self.inner.num_facets()
    }

    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets().iter().map(|&f| positions(f)).collect()
    }

    fn f_vector(&self) -> PyResult<Vec<usize>> {
        Ok(subword::f_vector(&self.inner).map_err(err)?.0)
    }

    fn reduced_euler_characteristic(&self) -> PyResult<i64> {
        subword::reduced_euler_characteristic(&self.inner).map_err(err)
    }

    fn is_sphere(&self) -> bool {
        self.inner.is_sphere(&self.system)
    }

    fn is_face(&self, p: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.contains_face(self.set(p)?))
    }

    fn is_facet(&self, p: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_facet(self.set(p)?))
    }

    /// Flips `position` out of `facet`; returns the new facet and the position that entered.
    fn flip(&self, facet: Vec<usize>, position: usize) -> PyResult<(Vec<usize>, usize)> {
        let f = self.set(facet)?;
        if position == 0 {
            return Err(PyValueError::new_err("positions are numbered from 1"));
        }
        let (g, entered) =
            subword::flip(&self.system, self.inner.word(), self.inner.pi(), f, position - 1).map_err(err)?;
        Ok((positions(g), entered + 1))
    }

    /// Minimal non-faces up to the given size.
    fn minimal_nonfaces(&self, max_size: usize) -> Vec<Vec<usize>> {
        subword::minimal_nonfaces(&self.inner, max_size).into_iter().map(positions).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.num_facets()
    }

    fn __repr__(&self) -> String {
        format!("SubwordComplex(word={}, facets={})", self.inner.word(), self.inner.num_facets())
    }
}

#[pymodule]
fn pysubwordlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoxeterSystem>()?;
    m.add_class::<PySubwordComplex>()?;
    Ok(())
}
