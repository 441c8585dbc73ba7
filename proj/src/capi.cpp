// Copyright 2026 the bcnn developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bcnn/bcnn.h"

#include <string>

#include "analysis.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "model_io.hpp"
#include "runner.hpp"
#include "states.hpp"

struct bcnn_config {
    bcnn::KvConfig kv;
};

struct bcnn_dataset {
    bcnn::Dataset data;
};

struct bcnn_model {
    bcnn::SavedModel model;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

bcnn_status classify_exception() {
    try {
        throw;
    } catch (const bcnn::ConfigError& e) {
        set_error(e.what());
        return BCNN_ERR_CONFIG;
    } catch (const bcnn::IncompatibleError& e) {
        set_error(e.what());
        return BCNN_ERR_INCOMPATIBLE;
    } catch (const bcnn::IoError& e) {
        set_error(e.what());
        return BCNN_ERR_IO;
    } catch (const bcnn::ShapeError& e) {
        set_error(e.what());
        return BCNN_ERR_IO;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return BCNN_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BCNN_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return BCNN_ERR_INTERNAL;
    }
}

template <typename Fn>
bcnn_status guarded(Fn&& fn) {
    try {
        fn();
        return BCNN_OK;
    } catch (...) {
        return classify_exception();
    }
}

bcnn_status require_args(bool ok) {
    if (!ok) {
        set_error("null or invalid argument");
        return BCNN_ERR_INVALID_ARGUMENT;
    }
    return BCNN_OK;
}

bcnn::ComplexMatrix matrix_from_raw(const double rho[32]) {
    bcnn::ComplexMatrix m(4);
    for (size_t k = 0; k < 16; ++k) {
        m(k / 4, k % 4) = bcnn::cdouble{rho[2 * k], rho[2 * k + 1]};
    }
    return m;
}

}  // namespace

extern "C" {

const char* bcnn_version(void) { return "0.1.0"; }

const char* bcnn_status_name(bcnn_status status) {
    switch (status) {
        case BCNN_OK:
            return "ok";
        case BCNN_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case BCNN_ERR_CONFIG:
            return "config error";
        case BCNN_ERR_IO:
            return "io error";
        case BCNN_ERR_INCOMPATIBLE:
            return "incompatible artifacts";
        case BCNN_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown";
}

const char* bcnn_last_error(void) { return g_last_error.c_str(); }

bcnn_status bcnn_config_open(const char* path, bcnn_config** out) {
    if (bcnn_status st = require_args(path && out)) {
        return st;
    }
    return guarded([&] { *out = new bcnn_config{bcnn::KvConfig::parse_file(path)}; });
}

bcnn_status bcnn_config_set(bcnn_config* config, const char* dotted_key, const char* value) {
    if (bcnn_status st = require_args(config && dotted_key && value)) {
        return st;
    }
    return guarded([&] { config->kv.set(dotted_key, value); });
}

void bcnn_config_close(bcnn_config* config) { delete config; }

bcnn_status bcnn_dataset_generate(const char* family, uint64_t size, uint64_t seed, int balanced,
                                  bcnn_dataset** out) {
    if (bcnn_status st = require_args(family && out)) {
        return st;
    }
    return guarded([&] {
        auto fam = bcnn::family_from_name(family);
        if (!fam) {
            throw std::invalid_argument(std::string("unknown state family: ") + family);
        }
        *out = new bcnn_dataset{bcnn::sample_dataset(*fam, size, seed, balanced != 0)};
    });
}

bcnn_status bcnn_dataset_open(const char* path, bcnn_dataset** out) {
    if (bcnn_status st = require_args(path && out)) {
        return st;
    }
    return guarded([&] { *out = new bcnn_dataset{bcnn::read_dataset_csv(path)}; });
}

bcnn_status bcnn_dataset_save(const bcnn_dataset* dataset, const char* path) {
    if (bcnn_status st = require_args(dataset && path)) {
        return st;
    }
    return guarded([&] { bcnn::write_dataset_csv(dataset->data, path); });
}

void bcnn_dataset_close(bcnn_dataset* dataset) { delete dataset; }

uint64_t bcnn_dataset_size(const bcnn_dataset* dataset) {
    return dataset ? dataset->data.size() : 0;
}

uint64_t bcnn_dataset_entangled(const bcnn_dataset* dataset) {
    return dataset ? dataset->data.entangled_count() : 0;
}

const char* bcnn_dataset_family(const bcnn_dataset* dataset) {
    return dataset ? bcnn::family_name(dataset->data.family) : "";
}

bcnn_status bcnn_label_ppt(const double rho[32], double* lambda_min, int* entangled) {
    if (bcnn_status st = require_args(rho && lambda_min && entangled)) {
        return st;
    }
    return guarded([&] {
        bcnn::PptLabel lbl = bcnn::label_ppt(matrix_from_raw(rho));
        *lambda_min = lbl.lambda_min;
        *entangled = lbl.entangled ? 1 : 0;
    });
}

bcnn_status bcnn_train_run(const bcnn_config* config, const char* out_dir,
                           double* test_accuracy) {
    if (bcnn_status st = require_args(config && out_dir)) {
        return st;
    }
    return guarded([&] {
        bcnn::TrainArtifacts art = bcnn::run_train(config->kv, out_dir);
        if (test_accuracy) {
            *test_accuracy = art.test_accuracy;
        }
    });
}

bcnn_status bcnn_model_open(const char* path, bcnn_model** out) {
    if (bcnn_status st = require_args(path && out)) {
        return st;
    }
    return guarded([&] { *out = new bcnn_model{bcnn::read_model_file(path)}; });
}

void bcnn_model_close(bcnn_model* model) { delete model; }

const char* bcnn_model_family(const bcnn_model* model) {
    return model ? bcnn::family_name(model->model.family) : "";
}

bcnn_status bcnn_model_predict(const bcnn_model* model, const double rho[32], double* prob) {
    if (bcnn_status st = require_args(model && rho && prob)) {
        return st;
    }
    return guarded([&] { *prob = bcnn::model_forward(matrix_from_raw(rho), model->model.params); });
}

bcnn_status bcnn_model_evaluate(const bcnn_model* model, const bcnn_dataset* dataset,
                                double* accuracy) {
    if (bcnn_status st = require_args(model && dataset && accuracy)) {
        return st;
    }
    return guarded([&] { *accuracy = bcnn::run_eval(model->model, dataset->data).accuracy; });
}

bcnn_status bcnn_report_operators(const bcnn_model* model, const char* out_csv) {
    if (bcnn_status st = require_args(model && out_csv)) {
        return st;
    }
    return guarded([&] { bcnn::report_operators(model->model, out_csv); });
}

bcnn_status bcnn_report_errors(const bcnn_model* model, const bcnn_dataset* dataset,
                               const char* axis, uint64_t bins, const char* out_csv,
                               uint64_t* error_count) {
    if (bcnn_status st = require_args(model && dataset && axis && out_csv)) {
        return st;
    }
    return guarded([&] {
        bcnn::Histogram hist =
            bcnn::report_error_histogram(model->model, dataset->data,
                                         bcnn::error_axis_from_name(axis), bins, out_csv);
        if (error_count) {
            uint64_t n = 0;
            for (size_t e : hist.errors) {
                n += e;
            }
            *error_count = n;
        }
    });
}

bcnn_status bcnn_report_round_retest(const bcnn_model* model, const bcnn_dataset* dataset,
                                     int decimals, const char* out_csv,
                                     double* original_accuracy, double* rounded_accuracy) {
    if (bcnn_status st = require_args(model && dataset)) {
        return st;
    }
    return guarded([&] {
        bcnn::RoundRetest rr = bcnn::report_round_retest(
            model->model, dataset->data, decimals, out_csv ? out_csv : "");
        if (original_accuracy) {
            *original_accuracy = rr.original_accuracy;
        }
        if (rounded_accuracy) {
            *rounded_accuracy = rr.rounded_accuracy;
        }
    });
}

bcnn_status bcnn_report_curve_point(const bcnn_config* config, const char* out_csv,
                                    double* mean_accuracy, double* std_accuracy) {
    if (bcnn_status st = require_args(config && out_csv)) {
        return st;
    }
    return guarded([&] {
        bcnn::CurvePoint point = bcnn::report_curve_point(config->kv, out_csv);
        if (mean_accuracy) {
            *mean_accuracy = point.mean_accuracy;
        }
        if (std_accuracy) {
            *std_accuracy = point.std_accuracy;
        }
    });
}

}  // extern "C"
