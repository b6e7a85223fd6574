import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from hypercc.encoding import QUATERNARY, build_input
from hypercc.estimators import CoordinateEncoder, CornerClassifier
from hypercc.network import TrainingSample, infer, train
from hypercc.patterns import generate_spiral, sample_training_points
from hypercc.quaternion import mask_from_symbol, symbol_from_mask


class TestCoordinateEncoder:
    def test_matches_build_input(self):
        enc = CoordinateEncoder(scheme="quaternary", n_values=16).fit([[1, 1]])
        got = enc.transform([[5, 12]])[0]
        expected = [mask_from_symbol(s) for s in build_input(5, 12, 16, QUATERNARY)[:-1]]
        assert got.tolist() == expected

    def test_output_widths(self):
        X = [[1, 2], [16, 16]]
        assert CoordinateEncoder("unary", 16).fit_transform(X).shape == (2, 32)
        assert CoordinateEncoder("quaternary", 16).fit_transform(X).shape == (2, 10)
        assert CoordinateEncoder("quaternion", 16).fit_transform(X).shape == (2, 2)

    def test_any_column_count(self):
        X = [[1, 2, 3], [4, 5, 6]]
        out = CoordinateEncoder("quaternion", 16).fit_transform(X)
        assert out.shape == (2, 3)

    def test_out_of_range_rejected(self):
        enc = CoordinateEncoder("quaternary", 16).fit([[1, 1]])
        with pytest.raises(ValueError):
            enc.transform([[0, 5]])
        with pytest.raises(ValueError):
            enc.transform([[17, 5]])

    def test_feature_names(self):
        enc = CoordinateEncoder("quaternary", 16).fit([[1, 1]])
        names = enc.get_feature_names_out(["row", "col"])
        assert len(names) == 10
        assert names[0] == "row_sym0"

    def test_get_params_round_trip(self):
        enc = CoordinateEncoder(scheme="unary", n_values=8)
        assert clone(enc).get_params() == {"scheme": "unary", "n_values": 8}


class TestCornerClassifier:
    def test_memorizes_at_radius_zero(self):
        rng = np.random.default_rng(1)
        X = rng.integers(0, 16, size=(20, 4))
        X = np.unique(X, axis=0)
        y = rng.integers(0, 2, size=X.shape[0])
        clf = CornerClassifier(radius=0, dim=4).fit(X, y)
        assert np.array_equal(clf.predict(X), y)

    def test_matches_core_infer(self):
        rng = np.random.default_rng(2)
        X = rng.integers(0, 4, size=(12, 5))
        y = rng.integers(0, 2, size=12)
        clf = CornerClassifier(radius=2, dim=2).fit(X, y)
        samples = [TrainingSample([symbol_from_mask(m) for m in row], (bit,))
                   for row, bit in zip(X.tolist(), y.tolist())]
        net = train(samples, radius=2, dim=2)
        probes = rng.integers(0, 4, size=(30, 5))
        got = clf.predict(probes)
        expected = [infer(net, [symbol_from_mask(m) for m in row])[0]
                    for row in probes.tolist()]
        assert got.tolist() == expected

    def test_multilabel_outputs(self):
        X = [[1, 0], [0, 1]]
        y = [[1, 0], [0, 1]]
        clf = CornerClassifier(radius=0, dim=1).fit(X, y)
        pred = clf.predict(X)
        assert pred.shape == (2, 2)
        assert pred.tolist() == y

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            CornerClassifier().predict([[0]])

    def test_validation(self):
        with pytest.raises(ValueError):
            CornerClassifier(dim=2).fit([[4]], [1])  # mask needs 3 channels
        with pytest.raises(ValueError):
            CornerClassifier().fit([[1]], [2])  # non-binary label
        with pytest.raises(ValueError):
            CornerClassifier().fit([[1], [2]], [1])  # length mismatch
        with pytest.raises(ValueError):
            CornerClassifier().fit(np.empty((0, 3)), [])
        clf = CornerClassifier(radius=0, dim=4).fit([[1, 2]], [1])
        with pytest.raises(ValueError):
            clf.predict([[1]])

    def test_score_via_mixin(self):
        X = [[0], [1], [2], [3]]
        y = [0, 0, 1, 1]
        clf = CornerClassifier(radius=0, dim=2).fit(X, y)
        assert clf.score(X, y) == 1.0


class TestPipeline:
    def test_spiral_pipeline(self):
        grid = generate_spiral(16)
        points = sample_training_points(grid, 256, seed=3)
        coords = np.array([[row + 1, col + 1] for row, col, _ in points])
        labels = np.array([label for _, _, label in points])
        model = Pipeline([
            ("encode", CoordinateEncoder(scheme="quaternary", n_values=16)),
            ("classify", CornerClassifier(radius=0, dim=2)),
        ])
        model.fit(coords, labels)
        assert np.array_equal(model.predict(coords), labels)

    def test_clone_and_params(self):
        model = Pipeline([
            ("encode", CoordinateEncoder()),
            ("classify", CornerClassifier(radius=3, dim=4)),
        ])
        twin = clone(model)
        assert twin.get_params()["classify__radius"] == 3
        twin.set_params(classify__radius=1)
        assert twin.get_params()["classify__radius"] == 1
