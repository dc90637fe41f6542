#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scenegen/schemas.hpp"

namespace scenegen::agents {

struct AgentEndpoint {
  std::string base_url;
  std::string model;
  std::string api_key_env = "SCENEGEN_API_KEY";
};

struct RequestRecord {
  std::string schema_id;
  double temperature = 0.0;
  std::string prompt;
  std::vector<std::string> image_refs;
  std::string response;
};

// Suggestion generation runs cooler than the layout agents.
double default_temperature(const std::string& schema_id);

class AgentClient {
public:
  virtual ~AgentClient() = default;

  // One raw exchange; the reply is the JSON text of the structured value.
  // Throws ClientError on transport failure.
  virtual std::string complete_raw(const std::string& prompt,
                                   const std::vector<std::string>& image_refs,
                                   const std::string& schema_id, double temperature) = 0;

  virtual std::chrono::milliseconds retry_backoff(int attempt) const;

  std::vector<RequestRecord> transcript() const;
  void set_transcript_dir(const std::filesystem::path& dir);

protected:
  void record(RequestRecord rec);

private:
  mutable std::mutex mutex_;
  std::vector<RequestRecord> transcript_;
  std::optional<std::filesystem::path> transcript_dir_;
  int transcript_seq_ = 0;
};

struct Prompt {
  std::string text;
  std::vector<std::string> image_refs;
};

// Full structured call: transport retries (3 attempts with backoff), JSON
// parse, schema validation, and one repair re-prompt before SchemaError.
nlohmann::json complete_structured(AgentClient& client, const Prompt& prompt,
                                   const std::string& schema_id);

class EmbeddingClient {
public:
  virtual ~EmbeddingClient() = default;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<double> embed_raw(const std::string& text) = 0;
};

// Validates input and the declared dimension, then normalizes to unit length.
std::vector<double> embed(EmbeddingClient& client, const std::string& text);

// Deterministic offline stand-ins; responses are pure functions of the
// prompt, the schema and the built-in fixture library.
class MockAgentClient : public AgentClient {
public:
  std::string complete_raw(const std::string& prompt,
                           const std::vector<std::string>& image_refs,
                           const std::string& schema_id, double temperature) override;
  std::chrono::milliseconds retry_backoff(int) const override {
    return std::chrono::milliseconds{0};
  }
};

// Normalized hashed bag-of-tokens over a fixed vocabulary hash.
class MockEmbeddingClient : public EmbeddingClient {
public:
  explicit MockEmbeddingClient(std::size_t dimension = 64) : dimension_(dimension) {}
  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed_raw(const std::string& text) override;

  // Bucket a single token lands in; exposed so tests can reason about collisions.
  std::size_t token_bucket(const std::string& token) const;

private:
  std::size_t dimension_;
};

// Chat-completions style HTTP adapter.
class HttpAgentClient : public AgentClient {
public:
  explicit HttpAgentClient(AgentEndpoint endpoint);
  std::string complete_raw(const std::string& prompt,
                           const std::vector<std::string>& image_refs,
                           const std::string& schema_id, double temperature) override;

private:
  AgentEndpoint endpoint_;
};

class HttpEmbeddingClient : public EmbeddingClient {
public:
  HttpEmbeddingClient(AgentEndpoint endpoint, std::size_t dimension);
  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed_raw(const std::string& text) override;

private:
  AgentEndpoint endpoint_;
  std::size_t dimension_;
};

// Names of the scene fixtures shipped with the mock library.
const std::vector<std::string>& fixture_scene_ids();

}  // namespace scenegen::agents
