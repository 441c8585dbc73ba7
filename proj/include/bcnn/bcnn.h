/* Copyright 2026 the bcnn developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the bcnn shared library: dataset generation for two-qubit
 * entanglement classification, training of branching-convolution models with
 * Hermitian observable kernels, evaluation, and report emission.
 *
 * All functions returning bcnn_status leave a human-readable message in
 * bcnn_last_error() on failure. Handles are opaque; every *_open/_generate
 * call pairs with the matching *_close. Matrices cross the boundary as 32
 * doubles: row-major 4x4, re/im interleaved.
 */

#ifndef BCNN_BCNN_H
#define BCNN_BCNN_H

#include <stdint.h>

#if defined(_WIN32)
#define BCNN_API
#else
#define BCNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bcnn_status {
    BCNN_OK = 0,
    BCNN_ERR_INVALID_ARGUMENT = 1,
    BCNN_ERR_CONFIG = 2,       /* unreadable/invalid config, missing keys */
    BCNN_ERR_IO = 3,           /* missing files, parse/shape failures */
    BCNN_ERR_INCOMPATIBLE = 4, /* model/dataset family mismatch */
    BCNN_ERR_INTERNAL = 5
} bcnn_status;

typedef struct bcnn_config bcnn_config;
typedef struct bcnn_dataset bcnn_dataset;
typedef struct bcnn_model bcnn_model;

BCNN_API const char* bcnn_version(void);
BCNN_API const char* bcnn_status_name(bcnn_status status);
/* Thread-local message describing the most recent failure on this thread. */
BCNN_API const char* bcnn_last_error(void);

/* --- config ------------------------------------------------------------ */

/* Parses a key=value config file with [section] headers. */
BCNN_API bcnn_status bcnn_config_open(const char* path, bcnn_config** out);
/* Overrides or adds a value; keys are dotted, e.g. "train.seed". */
BCNN_API bcnn_status bcnn_config_set(bcnn_config* config, const char* dotted_key,
                                     const char* value);
BCNN_API void bcnn_config_close(bcnn_config* config);

/* --- datasets ----------------------------------------------------------- */

/* family is one of "werner", "g1werner", "g2werner", "general". balanced is
 * honored for "general" only and enforces a 1:1 label split. */
BCNN_API bcnn_status bcnn_dataset_generate(const char* family, uint64_t size, uint64_t seed,
                                           int balanced, bcnn_dataset** out);
BCNN_API bcnn_status bcnn_dataset_open(const char* path, bcnn_dataset** out);
BCNN_API bcnn_status bcnn_dataset_save(const bcnn_dataset* dataset, const char* path);
BCNN_API void bcnn_dataset_close(bcnn_dataset* dataset);

BCNN_API uint64_t bcnn_dataset_size(const bcnn_dataset* dataset);
BCNN_API uint64_t bcnn_dataset_entangled(const bcnn_dataset* dataset);
BCNN_API const char* bcnn_dataset_family(const bcnn_dataset* dataset);

/* PPT label of a single state: minimum eigenvalue of the partial transpose
 * and the entanglement verdict (lambda_min < 0). */
BCNN_API bcnn_status bcnn_label_ppt(const double rho[32], double* lambda_min, int* entangled);

/* --- training ----------------------------------------------------------- */

/* Trains per the config ([data], [arch], [train] sections), writes model.txt,
 * history.csv and manifest.txt into out_dir, and reports the accuracy on the
 * config's test split. */
BCNN_API bcnn_status bcnn_train_run(const bcnn_config* config, const char* out_dir,
                                    double* test_accuracy);

/* --- models ------------------------------------------------------------- */

BCNN_API bcnn_status bcnn_model_open(const char* path, bcnn_model** out);
BCNN_API void bcnn_model_close(bcnn_model* model);
BCNN_API const char* bcnn_model_family(const bcnn_model* model);

/* Probability in (0,1) that the given state is entangled. */
BCNN_API bcnn_status bcnn_model_predict(const bcnn_model* model, const double rho[32],
                                        double* prob);
BCNN_API bcnn_status bcnn_model_evaluate(const bcnn_model* model, const bcnn_dataset* dataset,
                                         double* accuracy);

/* --- reports ------------------------------------------------------------ */

/* Trained operator table, one row per non-identity kernel combination with
 * columns X1,Y1,Z1,I1,X2,Y2,Z2,I2. */
BCNN_API bcnn_status bcnn_report_operators(const bcnn_model* model, const char* out_csv);

/* Histogram of misclassified vs. all test samples along axis "p", "theta" or
 * "lambda_min". error_count may be NULL. */
BCNN_API bcnn_status bcnn_report_errors(const bcnn_model* model, const bcnn_dataset* dataset,
                                        const char* axis, uint64_t bins, const char* out_csv,
                                        uint64_t* error_count);

/* Re-evaluates with every Pauli coefficient rounded to `decimals` places.
 * out_csv may be NULL to skip the artifact. */
BCNN_API bcnn_status bcnn_report_round_retest(const bcnn_model* model,
                                              const bcnn_dataset* dataset, int decimals,
                                              const char* out_csv, double* original_accuracy,
                                              double* rounded_accuracy);

/* Trains report.repeats fresh models for the configured architecture and
 * appends one accuracy-curve row (m, mean, std, seeds). */
BCNN_API bcnn_status bcnn_report_curve_point(const bcnn_config* config, const char* out_csv,
                                             double* mean_accuracy, double* std_accuracy);

#ifdef __cplusplus
}
#endif

#endif /* BCNN_BCNN_H */
