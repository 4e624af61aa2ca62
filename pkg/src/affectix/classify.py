"""Subject-level classification over document profiles.

Holds the feature extraction, the stratified fold planner, five small
deterministic classifiers, the ranking metrics, and the cross-validation
driver that aggregates them into a per-classifier report.

Four further ids from the wider method comparison (svc, gboost, bagging,
rforest) are recognised but deliberately not implemented; requesting one
raises :class:`ClassifierNotImplementedError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ArgumentError, ClassifierNotImplementedError, UndefinedMetricError
from .intensity import DocumentProfile

FEATURE_MODES = ("mean_only", "mean_and_std")
IMPLEMENTED_CLASSIFIERS = ("logreg", "lda", "gnb", "knn", "dtree")
UNIMPLEMENTED_CLASSIFIERS = {
    "svc": "SVC",
    "gboost": "GradientBoostingClassifier",
    "bagging": "BaggingClassifier",
    "rforest": "RandomForestClassifier",
}

TABLE_COLUMNS = (
    "classifier",
    "perf_mean",
    "perf_std",
    "auc_mean",
    "auc_std",
    "f1_mean",
    "f1_std",
)


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[float, ...]
    subject_id: str

    def __post_init__(self) -> None:
        if not self.values:
            raise ArgumentError("feature vector must be non-empty")
        if not all(math.isfinite(v) for v in self.values):
            raise ArgumentError(f"{self.subject_id}: non-finite feature value")


@dataclass(frozen=True)
class LabeledDataset:
    rows: tuple[tuple[FeatureVector, int], ...]
    class_names: tuple[str, str] = ("0", "1")

    def __post_init__(self) -> None:
        if not self.rows:
            raise ArgumentError("dataset is empty")
        lengths = {len(fv.values) for fv, _ in self.rows}
        if len(lengths) != 1:
            raise ArgumentError("feature vectors differ in length")
        ids = [fv.subject_id for fv, _ in self.rows]
        if len(set(ids)) != len(ids):
            raise ArgumentError("subject_ids are not unique")
        counts = {0: 0, 1: 0}
        for _, label in self.rows:
            if label not in (0, 1):
                raise ArgumentError(f"label must be 0 or 1, got {label!r}")
            counts[label] += 1
        if counts[0] < 2 or counts[1] < 2:
            raise ArgumentError("each class needs at least 2 rows")

    @property
    def n_features(self) -> int:
        return len(self.rows[0][0].values)

    def class_counts(self) -> tuple[int, int]:
        labels = [label for _, label in self.rows]
        return labels.count(0), labels.count(1)

    def feature_matrix(self) -> np.ndarray:
        return np.array([fv.values for fv, _ in self.rows], dtype=float)

    def label_vector(self) -> np.ndarray:
        return np.array([label for _, label in self.rows], dtype=int)


@dataclass(frozen=True)
class FoldPlan:
    """Row index -> fold index assignment for k folds."""

    k: int
    assignments: tuple[int, ...]
    seed: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ArgumentError("k must be >= 2")
        present = set(self.assignments)
        if not present <= set(range(self.k)) or len(present) != self.k:
            raise ArgumentError("every fold must be non-empty and in range")


@dataclass(frozen=True)
class EvalReport:
    """Cross-validation metrics for one classifier: mean/std over folds."""

    classifier_id: str
    accuracy: tuple[float, float]
    roc_auc: tuple[float, float]
    f1: tuple[float, float]
    per_fold: tuple[tuple[float, float | None, float], ...]
    seed: int
    auc_excluded_folds: int = 0

    def to_json_dict(self) -> dict:
        return {
            "classifier_id": self.classifier_id,
            "seed": self.seed,
            "k": len(self.per_fold),
            "accuracy": {"mean": self.accuracy[0], "std": self.accuracy[1]},
            "roc_auc": {
                "mean": self.roc_auc[0],
                "std": self.roc_auc[1],
                "excluded_folds": self.auc_excluded_folds,
            },
            "f1": {"mean": self.f1[0], "std": self.f1[1]},
            "per_fold": [
                {"accuracy": acc, "roc_auc": auc, "f1": f1}
                for acc, auc, f1 in self.per_fold
            ],
        }

    def csv_row(self) -> tuple:
        return (
            self.classifier_id,
            self.accuracy[0],
            self.accuracy[1],
            self.roc_auc[0],
            self.roc_auc[1],
            self.f1[0],
            self.f1[1],
        )


def features_from_profiles(
    profiles: Sequence[DocumentProfile],
    labels: dict[str, int],
    mode: str = "mean_only",
    class_names: tuple[str, str] = ("0", "1"),
) -> LabeledDataset:
    """One row per profile; features are [mean_ei] or [mean_ei, std_ei]."""
    if mode not in FEATURE_MODES:
        raise ArgumentError(f"mode must be one of {FEATURE_MODES}, got {mode!r}")
    rows = []
    seen: set[str] = set()
    for profile in profiles:
        if profile.doc_id in seen:
            raise ArgumentError(f"duplicate doc_id {profile.doc_id!r}")
        seen.add(profile.doc_id)
        if profile.doc_id not in labels:
            raise ArgumentError(f"no label for doc_id {profile.doc_id!r}")
        if mode == "mean_only":
            values: tuple[float, ...] = (profile.mean_ei,)
        else:
            values = (profile.mean_ei, profile.std_ei)
        rows.append((FeatureVector(values, profile.doc_id), labels[profile.doc_id]))
    return LabeledDataset(tuple(rows), class_names=class_names)


# ---------------------------------------------------------------------------
# deterministic shuffling
#
# splitmix64 keeps fold assignments reproducible independent of interpreter
# or library versions. The modulo bias of `next() % n` is irrelevant at
# these sizes; determinism is the point, not statistical purity.
# ---------------------------------------------------------------------------

_U64 = 0xFFFFFFFFFFFFFFFF


def _splitmix64(seed: int) -> Iterator[int]:
    state = seed & _U64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _U64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        yield z ^ (z >> 31)


def _shuffled(items: Sequence[int], stream: Iterator[int]) -> list[int]:
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = next(stream) % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def _canonical_order(ds: LabeledDataset) -> list[int]:
    # sort by subject_id so fold plans ignore incoming row order
    return sorted(range(len(ds.rows)), key=lambda i: ds.rows[i][0].subject_id)


def stratified_kfold(ds: LabeledDataset, k: int, seed: int) -> FoldPlan:
    """Shuffle each class and deal rows round-robin into k folds.

    Rows are first put in canonical (subject_id) order, so the plan does
    not depend on how the dataset rows were arranged. The round-robin
    pointer runs on across classes, keeping per-class fold counts within
    one of each other.
    """
    n0, n1 = ds.class_counts()
    if k < 2:
        raise ArgumentError("k must be >= 2")
    if k > min(n0, n1):
        raise ArgumentError(
            f"k={k} exceeds the smaller class count {min(n0, n1)}"
        )
    canonical = _canonical_order(ds)
    stream = _splitmix64(seed)
    assignments = [0] * len(ds.rows)
    pointer = 0
    for label in (0, 1):
        class_rows = [i for i in canonical if ds.rows[i][1] == label]
        for row in _shuffled(class_rows, stream):
            assignments[row] = pointer % k
            pointer += 1
    return FoldPlan(k=k, assignments=tuple(assignments), seed=seed)


# ---------------------------------------------------------------------------
# classifiers
# ---------------------------------------------------------------------------


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=float)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def logistic_loss_gradient(
    weights: np.ndarray,
    bias: float,
    X: np.ndarray,
    y: np.ndarray,
    lam: float = 1.0,
) -> tuple[float, np.ndarray, float]:
    """Penalized negative log-likelihood and its exact gradient.

    loss = sum_i [log(1 + exp(z_i)) - y_i z_i] + lam/2 * ||w||^2 with
    z = X w + b; the bias is not penalized.
    """
    z = X @ weights + bias
    loss = float(np.logaddexp(0.0, z).sum() - (y * z).sum()) + 0.5 * lam * float(
        weights @ weights
    )
    residual = _sigmoid(z) - y
    grad_w = X.T @ residual + lam * weights
    grad_b = float(residual.sum())
    return loss, grad_w, grad_b


class _LogisticRegression:
    """L2-penalized logistic regression fit by full-batch gradient descent.

    Features are standardized on the training fold. The step size is
    1/L for the exact curvature bound L = sigma_max([1|X])^2 / 4 + lam,
    and descent stops once the gradient infinity norm drops below 1e-8
    or after 10000 iterations.
    """

    lam = 1.0
    tol = 1e-8
    max_iter = 10_000

    def fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._mu = X.mean(axis=0)
        sd = X.std(axis=0)
        self._sd = np.where(sd == 0.0, 1.0, sd)
        Xs = (X - self._mu) / self._sd
        yf = y.astype(float)

        augmented = np.hstack([np.ones((len(Xs), 1)), Xs])
        lipschitz = np.linalg.norm(augmented, 2) ** 2 / 4.0 + self.lam
        step = 1.0 / lipschitz

        w = np.zeros(Xs.shape[1])
        b = 0.0
        for _ in range(self.max_iter):
            _, grad_w, grad_b = logistic_loss_gradient(w, b, Xs, yf, self.lam)
            if max(np.abs(grad_w).max(initial=0.0), abs(grad_b)) < self.tol:
                break
            w -= step * grad_w
            b -= step * grad_b
        self._w = w
        self._b = b

    def scores(self, X: np.ndarray) -> np.ndarray:
        Xs = (X - self._mu) / self._sd
        return _sigmoid(Xs @ self._w + self._b)


class _LinearDiscriminant:
    """Two-class Fisher discriminant with pooled covariance.

    The diagonal ridge of 1e-6 is taken relative to the mean pooled
    variance, so rescaling the feature space rescales the ridge with it
    and decisions stay affine invariant.
    """

    ridge = 1e-6

    def fit(self, X: np.ndarray, y: np.ndarray) -> None:
        X0 = X[y == 0]
        X1 = X[y == 1]
        mu0 = X0.mean(axis=0)
        mu1 = X1.mean(axis=0)
        scatter = (X0 - mu0).T @ (X0 - mu0) + (X1 - mu1).T @ (X1 - mu1)
        cov = scatter / (len(X) - 2)
        scale = float(np.trace(cov)) / X.shape[1]
        if scale <= 0.0:
            scale = 1.0
        cov = cov + self.ridge * scale * np.eye(X.shape[1])
        self._w = np.linalg.solve(cov, mu1 - mu0)
        self._c = -0.5 * float((mu0 + mu1) @ self._w) + math.log(len(X1) / len(X0))

    def scores(self, X: np.ndarray) -> np.ndarray:
        return _sigmoid(X @ self._w + self._c)


class _GaussianNaiveBayes:
    """Per-class, per-feature Gaussians; variances floored at 1e-9."""

    var_floor = 1e-9

    def fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._theta = []
        self._var = []
        self._log_prior = []
        for label in (0, 1):
            Xk = X[y == label]
            self._theta.append(Xk.mean(axis=0))
            self._var.append(np.maximum(Xk.var(axis=0), self.var_floor))
            self._log_prior.append(math.log(len(Xk) / len(X)))

    def _log_likelihood(self, X: np.ndarray, label: int) -> np.ndarray:
        theta = self._theta[label]
        var = self._var[label]
        return self._log_prior[label] - 0.5 * (
            np.log(2.0 * math.pi * var) + (X - theta) ** 2 / var
        ).sum(axis=1)

    def scores(self, X: np.ndarray) -> np.ndarray:
        ll0 = self._log_likelihood(X, 0)
        ll1 = self._log_likelihood(X, 1)
        return _sigmoid(ll1 - ll0)


class _KNearest:
    """k nearest neighbours (k=5), inverse-distance weighted vote.

    Distance ties resolve to the lower training row index; a test point
    sitting exactly on training points is scored by those points alone.
    """

    k = 5

    def fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._X = X
        self._y = y.astype(float)

    def scores(self, X: np.ndarray) -> np.ndarray:
        k = min(self.k, len(self._X))
        out = np.empty(len(X))
        for i, x in enumerate(X):
            dist = np.sqrt(((self._X - x) ** 2).sum(axis=1))
            nearest = np.argsort(dist, kind="stable")[:k]
            d = dist[nearest]
            labels = self._y[nearest]
            if (d == 0.0).any():
                out[i] = labels[d == 0.0].mean()
            else:
                weights = 1.0 / d
                out[i] = float((weights * labels).sum() / weights.sum())
        return out


class _TreeNode:
    __slots__ = ("feature", "threshold", "left", "right", "score")

    def __init__(self, score=None, feature=None, threshold=None, left=None, right=None):
        self.score = score
        self.feature = feature
        self.threshold = threshold
        self.left = left
        self.right = right


def _gini(n1: int, n: int) -> float:
    p = n1 / n
    return 2.0 * p * (1.0 - p)


class _DecisionTree:
    """CART with Gini impurity, midpoint thresholds, no depth limit.

    Splits any impure node with at least 2 samples as long as some
    feature still varies, picking the lowest weighted impurity (first
    candidate wins ties), so distinct training points are memorized.
    """

    min_samples_split = 2

    def fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._root = self._build(X, y)

    def _build(self, X: np.ndarray, y: np.ndarray) -> _TreeNode:
        n = len(y)
        n1 = int(y.sum())
        if n1 == 0 or n1 == n or n < self.min_samples_split:
            return _TreeNode(score=n1 / n)
        best: tuple[float, int, float] | None = None
        for feature in range(X.shape[1]):
            values = np.unique(X[:, feature])
            for lo, hi in zip(values[:-1], values[1:]):
                threshold = (lo + hi) / 2.0
                mask = X[:, feature] <= threshold
                nl = int(mask.sum())
                nr = n - nl
                weighted = (
                    nl * _gini(int(y[mask].sum()), nl)
                    + nr * _gini(int(y[~mask].sum()), nr)
                ) / n
                if best is None or weighted < best[0]:
                    best = (weighted, feature, threshold)
        if best is None:
            return _TreeNode(score=n1 / n)
        _, feature, threshold = best
        mask = X[:, feature] <= threshold
        return _TreeNode(
            feature=feature,
            threshold=threshold,
            left=self._build(X[mask], y[mask]),
            right=self._build(X[~mask], y[~mask]),
        )

    def scores(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(len(X))
        for i, x in enumerate(X):
            node = self._root
            while node.score is None:
                node = node.left if x[node.feature] <= node.threshold else node.right
            out[i] = node.score
        return out


_CLASSIFIER_FACTORY = {
    "logreg": _LogisticRegression,
    "lda": _LinearDiscriminant,
    "gnb": _GaussianNaiveBayes,
    "knn": _KNearest,
    "dtree": _DecisionTree,
}


def _resolve(classifier_id: str):
    if classifier_id in UNIMPLEMENTED_CLASSIFIERS:
        raise ClassifierNotImplementedError(
            f"classifier {classifier_id!r} ({UNIMPLEMENTED_CLASSIFIERS[classifier_id]}) "
            f"is recognised but not implemented; available: "
            f"{', '.join(IMPLEMENTED_CLASSIFIERS)}"
        )
    try:
        return _CLASSIFIER_FACTORY[classifier_id]
    except KeyError:
        raise ArgumentError(f"unknown classifier id {classifier_id!r}") from None


def fit_predict(
    classifier_id: str,
    train: LabeledDataset,
    test_features: Sequence[FeatureVector],
) -> list[tuple[int, float]]:
    """Fit on the training set and return (label, score) per test vector."""
    factory = _resolve(classifier_id)
    for fv in test_features:
        if len(fv.values) != train.n_features:
            raise ArgumentError(
                f"{fv.subject_id}: feature length {len(fv.values)} does not "
                f"match training length {train.n_features}"
            )
    model = factory()
    model.fit(train.feature_matrix(), train.label_vector())
    scores = model.scores(np.array([fv.values for fv in test_features], dtype=float))
    return [(int(s >= 0.5), float(s)) for s in scores]


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------


def roc_auc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """Rank-based AUC: P(score_pos > score_neg) with ties worth one half."""
    if len(scores) != len(labels):
        raise ArgumentError("scores and labels differ in length")
    n = len(scores)
    n_pos = sum(1 for label in labels if label == 1)
    n_neg = n - n_pos
    if n_pos == 0 or n_neg == 0:
        raise UndefinedMetricError("ROC AUC needs both classes present")
    order = sorted(range(n), key=lambda i: scores[i])
    ranks = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j < n and scores[order[j]] == scores[order[i]]:
            j += 1
        avg_rank = (i + 1 + j) / 2.0  # ranks i+1 .. j share their average
        for t in range(i, j):
            ranks[order[t]] = avg_rank
        i = j
    rank_sum_pos = sum(r for r, label in zip(ranks, labels) if label == 1)
    u = rank_sum_pos - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)


def f1_score(pred: Sequence[int], truth: Sequence[int]) -> float:
    """F1 for class 1; zero when precision + recall is zero."""
    if len(pred) != len(truth):
        raise ArgumentError("pred and truth differ in length")
    if not pred:
        raise ArgumentError("empty inputs")
    tp = sum(1 for p, t in zip(pred, truth) if p == 1 and t == 1)
    fp = sum(1 for p, t in zip(pred, truth) if p == 1 and t == 0)
    fn = sum(1 for p, t in zip(pred, truth) if p == 0 and t == 1)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _population_std(values: Sequence[float]) -> float:
    mean = sum(values) / len(values)
    return math.sqrt(sum((v - mean) ** 2 for v in values) / len(values))


def evaluate_fold_plan(
    classifier_id: str, ds: LabeledDataset, plan: FoldPlan
) -> EvalReport:
    """Train on each fold's complement and aggregate metrics over folds.

    A test fold holding a single class still yields accuracy and F1 but
    no AUC; such folds are excluded from the AUC mean and counted.
    """
    _resolve(classifier_id)
    if len(plan.assignments) != len(ds.rows):
        raise ArgumentError("fold plan does not cover the dataset")
    canonical = _canonical_order(ds)
    X = ds.feature_matrix()
    y = ds.label_vector()

    per_fold: list[tuple[float, float | None, float]] = []
    for fold in range(plan.k):
        test_rows = [i for i in canonical if plan.assignments[i] == fold]
        train_rows = [i for i in canonical if plan.assignments[i] != fold]
        model = _CLASSIFIER_FACTORY[classifier_id]()
        model.fit(X[train_rows], y[train_rows])
        scores = model.scores(X[test_rows])
        pred = [int(s >= 0.5) for s in scores]
        truth = [int(v) for v in y[test_rows]]
        acc = sum(p == t for p, t in zip(pred, truth)) / len(truth)
        f1 = f1_score(pred, truth)
        try:
            auc: float | None = roc_auc([float(s) for s in scores], truth)
        except UndefinedMetricError:
            auc = None
        per_fold.append((acc, auc, f1))

    accs = [acc for acc, _, _ in per_fold]
    f1s = [f1 for _, _, f1 in per_fold]
    aucs = [auc for _, auc, _ in per_fold if auc is not None]
    if not aucs:
        raise UndefinedMetricError("ROC AUC undefined in every fold")
    return EvalReport(
        classifier_id=classifier_id,
        accuracy=(sum(accs) / len(accs), _population_std(accs)),
        roc_auc=(sum(aucs) / len(aucs), _population_std(aucs)),
        f1=(sum(f1s) / len(f1s), _population_std(f1s)),
        per_fold=tuple(per_fold),
        seed=plan.seed,
        auc_excluded_folds=len(per_fold) - len(aucs),
    )


def cross_validate(
    classifier_id: str, ds: LabeledDataset, k: int, seed: int
) -> EvalReport:
    """Stratified k-fold cross-validation of one classifier."""
    _resolve(classifier_id)
    return evaluate_fold_plan(classifier_id, ds, stratified_kfold(ds, k, seed))
