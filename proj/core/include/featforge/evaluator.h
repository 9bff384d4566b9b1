// Copyright 2026 The FeatForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEATFORGE_EVALUATOR_H_
#define FEATFORGE_EVALUATOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "featforge/query.h"
#include "featforge/table.h"

namespace featforge {

enum class TaskKind { kBinaryClassification, kMulticlassClassification, kRegression };

std::string_view TaskName(TaskKind task);
std::optional<TaskKind> ParseTask(std::string_view name);
inline bool IsClassification(TaskKind task) { return task != TaskKind::kRegression; }

enum class ModelKind { kLogisticRegression, kLinearRegression, kOneVsRestLogistic };

std::string_view ModelName(ModelKind kind);
std::optional<ModelKind> ParseModel(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::kLogisticRegression;
  double learning_rate = 0.1;
  int epochs = 300;
  double l2 = 1e-4;
};

// The model family that suits a task: logistic, one-vs-rest logistic, or
// linear regression.
ModelKind DefaultModelFor(TaskKind task);

// Column-major dense matrix; appending a feature is a push_back.
struct FeatureMatrix {
  size_t rows = 0;
  std::vector<std::vector<double>> columns;

  size_t cols() const { return columns.size(); }
  // Throws std::invalid_argument on a length mismatch.
  void AddColumn(std::vector<double> values);
};

// Numeric columns of a table as a matrix (Int/Float/DateTime as numbers,
// Null as `fill`), skipping `exclude` and text columns.
FeatureMatrix NumericFeatures(const Table& table,
                              std::span<const std::string> exclude, double fill);

// Fitted linear model over z-scored inputs. For one-vs-rest there is one
// weight row per class; otherwise one row.
class Model {
 public:
  ModelKind kind() const { return kind_; }
  size_t num_classes() const { return num_classes_; }

  // Positive-class probability (logistic), predicted value (linear), or the
  // argmax class id (one-vs-rest).
  std::vector<double> Predict(const FeatureMatrix& x) const;
  // Per-class probabilities for one-vs-rest; row-major rows x classes.
  std::vector<double> ClassScores(const FeatureMatrix& x) const;

  const std::vector<std::vector<double>>& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }

 private:
  friend Model Fit(const FeatureMatrix&, std::span<const double>, const ModelSpec&);

  std::vector<double> Linear(const FeatureMatrix& x, size_t output) const;

  ModelKind kind_ = ModelKind::kLogisticRegression;
  size_t num_classes_ = 2;
  std::vector<double> means_;
  std::vector<double> scales_;  // 0 for constant columns
  std::vector<std::vector<double>> weights_;
  std::vector<double> bias_;
};

// Full-batch gradient descent from zero weights, so the result depends only
// on the inputs. Classification labels are class ids 0..C-1. Throws
// std::invalid_argument for fewer than two rows, mismatched lengths, or
// single-class classification labels.
Model Fit(const FeatureMatrix& x, std::span<const double> labels,
          const ModelSpec& spec);

// Mann-Whitney AUC; tied scores count one half. Throws
// std::invalid_argument unless both classes are present.
double Auc(std::span<const double> scores, std::span<const double> labels);
// Unweighted mean of per-class F1 over classes seen in truth or prediction.
double MacroF1(std::span<const double> predicted, std::span<const double> labels);
double Rmse(std::span<const double> predicted, std::span<const double> labels);

struct LossValue {
  double value = 0.0;       // lower is better
  double metric_raw = 0.0;  // AUC, macro-F1 or RMSE
  bool degenerate = false;
};

// 1 - AUC, 1 - macro-F1 or RMSE on the given rows. A single-class binary
// validation set yields the degenerate loss 0.5.
LossValue Loss(const Model& model, const FeatureMatrix& x,
               std::span<const double> labels, TaskKind task);

// Everything needed to score a candidate query by validation loss. All
// pointers must outlive the objective.
struct ObjectiveContext {
  const Table* relevant = nullptr;
  const Table* train = nullptr;
  const Table* valid = nullptr;
  std::span<const double> train_labels;
  std::span<const double> valid_labels;
  const FeatureMatrix* base_train = nullptr;
  const FeatureMatrix* base_valid = nullptr;
  ModelSpec model;
  TaskKind task = TaskKind::kBinaryClassification;
  double fill = 0.0;
};

// Executes the query against the train and valid rows, appends the feature
// to the base features, fits on train and returns the validation loss.
LossValue QueryObjective(const CandidateQuery& query, const ObjectiveContext& ctx);

// Validation loss of the base features alone.
LossValue BaseObjective(const ObjectiveContext& ctx);

}  // namespace featforge

#endif  // FEATFORGE_EVALUATOR_H_
