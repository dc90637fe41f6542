#include "scenegen/agents.hpp"

#include <cmath>
#include <fstream>
#include <thread>

#include "scenegen/errors.hpp"

namespace scenegen::agents {

double default_temperature(const std::string& schema_id) {
  return schema_id == kDiagnosisReportSchema ? 0.3 : 0.7;
}

std::chrono::milliseconds AgentClient::retry_backoff(int attempt) const {
  return std::chrono::milliseconds{250 << attempt};
}

std::vector<RequestRecord> AgentClient::transcript() const {
  std::lock_guard lock(mutex_);
  return transcript_;
}

void AgentClient::set_transcript_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(dir);
  transcript_dir_ = dir;
}

void AgentClient::record(RequestRecord rec) {
  std::lock_guard lock(mutex_);
  if (transcript_dir_) {
    char name[32];
    std::snprintf(name, sizeof(name), "%04d_", transcript_seq_);
    std::ofstream out(*transcript_dir_ / (name + rec.schema_id + ".log"));
    out << "schema " << rec.schema_id << "\n"
        << "temperature " << rec.temperature << "\n";
    for (const auto& ref : rec.image_refs) out << "image " << ref << "\n";
    out << "--- prompt\n" << rec.prompt << "\n--- response\n" << rec.response << "\n";
  }
  ++transcript_seq_;
  transcript_.push_back(std::move(rec));
}

nlohmann::json complete_structured(AgentClient& client, const Prompt& prompt,
                                   const std::string& schema_id) {
  const double temperature = default_temperature(schema_id);

  auto attempt = [&](const std::string& text) {
    std::string raw;
    for (int i = 0;; ++i) {
      try {
        raw = client.complete_raw(text, prompt.image_refs, schema_id, temperature);
        break;
      } catch (const ClientError&) {
        if (i >= 2) throw;
        std::this_thread::sleep_for(client.retry_backoff(i));
      }
    }
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("schema " + schema_id + ": reply is not valid JSON: " + e.what());
    }
    validate_schema(schema_id, value);
    return value;
  };

  try {
    return attempt(prompt.text);
  } catch (const SchemaError& e) {
    const std::string repaired =
        prompt.text + "\n\nThe previous reply was rejected (" + e.what() +
        "). Respond again with JSON that satisfies the '" + schema_id + "' contract.";
    return attempt(repaired);
  }
}

std::vector<double> embed(EmbeddingClient& client, const std::string& text) {
  if (text.empty()) throw ParameterError("embed: text must be non-empty");
  std::vector<double> v = client.embed_raw(text);
  if (v.size() != client.dimension()) {
    throw DimensionMismatch("embedding has dimension " + std::to_string(v.size()) +
                            ", client declares " + std::to_string(client.dimension()));
  }
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 <= 0.0) {
    // text with no recognizable tokens still needs a direction
    v.assign(client.dimension(), 0.0);
    v[0] = 1.0;
    return v;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

}  // namespace scenegen::agents
