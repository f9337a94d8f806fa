#include "schurlat.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "schurlat/engine.hpp"
#include "schurlat/error.hpp"

struct schurlat_context {
  std::string last_error;
  schurlat_progress_fn progress = nullptr;
  void* progress_user = nullptr;
};

struct schurlat_module {
  std::unique_ptr<schurlat::SchurModule> module;
};

namespace {

schurlat_status status_for(schurlat::ErrorCode code) {
  switch (schurlat::exit_code_for(code)) {
    case 3:
      return SCHURLAT_CAP_EXCEEDED;
    case 4:
      return SCHURLAT_INVARIANT_VIOLATION;
    default:
      return SCHURLAT_INVALID_INPUT;
  }
}

template <class Fn>
schurlat_status guarded(schurlat_context* ctx, Fn&& fn) {
  if (!ctx) return SCHURLAT_INVALID_INPUT;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const schurlat::Error& e) {
    ctx->last_error = std::string(schurlat::error_code_name(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = std::string("InvalidInput: ") + e.what();
    return SCHURLAT_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return SCHURLAT_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SCHURLAT_INTERNAL_ERROR;
  }
}

schurlat::Partition partition_from(const int* parts, size_t count) {
  if (!parts && count) schurlat::fail(schurlat::ErrorCode::kInvalidInput, "null partition");
  return schurlat::Partition(std::vector<int>(parts, parts + count));
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* schurlat_version(void) { return schurlat::kVersion; }

schurlat_status schurlat_context_create(schurlat_context** out) {
  if (!out) return SCHURLAT_INVALID_INPUT;
  *out = new (std::nothrow) schurlat_context();
  return *out ? SCHURLAT_OK : SCHURLAT_INTERNAL_ERROR;
}

void schurlat_context_destroy(schurlat_context* ctx) { delete ctx; }

const char* schurlat_last_error(const schurlat_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void schurlat_set_progress(schurlat_context* ctx, schurlat_progress_fn fn, void* user) {
  if (!ctx) return;
  ctx->progress = fn;
  ctx->progress_user = user;
}

schurlat_status schurlat_run(schurlat_context* ctx, const char* command, const char* request_json, char** response) {
  return guarded(ctx, [&]() {
    if (!command || !response) schurlat::fail(schurlat::ErrorCode::kInvalidInput, "null argument");
    *response = nullptr;
    const auto request = nlohmann::json::parse(request_json && *request_json ? request_json : "{}");
    schurlat::Progress progress;
    if (ctx->progress) {
      progress = [ctx](const std::string& msg) { ctx->progress(msg.c_str(), ctx->progress_user); };
    }
    const auto result = schurlat::run_command(command, request, progress);
    *response = copy_string(result.dump());
    if (std::string(command) == "scan" && schurlat::scan_exit_code(result) == 4) {
      ctx->last_error = "InvariantViolation: a scan case failed a cross-check";
      return SCHURLAT_INVARIANT_VIOLATION;
    }
    return SCHURLAT_OK;
  });
}

void schurlat_string_free(char* s) { std::free(s); }

schurlat_status schurlat_is_core(schurlat_context* ctx, const int* parts, size_t count, unsigned modulus, int* out) {
  return guarded(ctx, [&]() {
    if (!out) schurlat::fail(schurlat::ErrorCode::kInvalidInput, "null output");
    *out = schurlat::is_core(partition_from(parts, count), static_cast<int>(modulus)) ? 1 : 0;
    return SCHURLAT_OK;
  });
}

schurlat_status schurlat_dimension(schurlat_context* ctx, unsigned n, const int* parts, size_t count, uint64_t* out) {
  return guarded(ctx, [&]() {
    if (!out) schurlat::fail(schurlat::ErrorCode::kInvalidInput, "null output");
    *out = schurlat::hook_content_dimension(partition_from(parts, count), static_cast<int>(n));
    return SCHURLAT_OK;
  });
}

schurlat_status schurlat_module_create(schurlat_context* ctx, unsigned n, const int* parts, size_t count,
                                       const char* model, schurlat_module** out) {
  return guarded(ctx, [&]() {
    if (!out) schurlat::fail(schurlat::ErrorCode::kInvalidInput, "null output");
    *out = nullptr;
    auto m = std::make_unique<schurlat_module>();
    m->module = std::make_unique<schurlat::SchurModule>(static_cast<int>(n), partition_from(parts, count),
                                                        schurlat::parse_model(model ? model : "weyl"));
    *out = m.release();
    return SCHURLAT_OK;
  });
}

size_t schurlat_module_dim(const schurlat_module* m) { return m ? m->module->dim() : 0; }

size_t schurlat_module_basis_word(const schurlat_module* m, size_t index, int* letters, size_t capacity) {
  if (!m || index >= m->module->dim()) return 0;
  const auto word = m->module->basis()[index].row_word();
  for (size_t i = 0; i < word.size() && i < capacity; ++i) letters[i] = word[i];
  return word.size();
}

void schurlat_module_destroy(schurlat_module* m) { delete m; }

}  // extern "C"
