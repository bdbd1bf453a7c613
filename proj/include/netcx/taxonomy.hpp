#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace netcx {

enum class VertexCategory { policy, infrastructure, address_literal };

std::string_view to_string(VertexCategory category) noexcept;
std::optional<VertexCategory> parse_category(std::string_view text) noexcept;

struct TypeInfo {
  VertexCategory category = VertexCategory::infrastructure;
  bool is_endpoint = false;

  bool operator==(const TypeInfo &) const = default;
};

/// Registry mapping (dialect, type_name) to category and endpoint flag.
///
/// Text form is one entry per line with four whitespace-separated columns:
///
///     dialect  type_name  category  endpoint(0|1)
///
/// where category is one of policy, infrastructure, address_literal.
/// '#' starts a comment; blank lines are ignored.
class Taxonomy {
public:
  /// Throws ValidationError on a duplicate (dialect, type_name) pair or an
  /// endpoint flag on a non-infrastructure category.
  void add(std::string dialect, std::string type_name, TypeInfo info);

  std::optional<TypeInfo> find(std::string_view dialect, std::string_view type_name) const;

  /// Throws TaxonomyError when the pair is unmapped.
  TypeInfo lookup(std::string_view dialect, std::string_view type_name) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const auto &entries() const noexcept { return entries_; }

  /// Throws ValidationError with the 1-based line number on bad input.
  static Taxonomy parse(std::string_view text);
  static Taxonomy load(const std::string &path);

  /// Serialises back to the text form, sorted by (dialect, type_name).
  std::string to_text() const;

  /// The calibrated built-in taxonomy for the four dialects.
  static const Taxonomy &builtin();
  static std::string_view builtin_text() noexcept;

private:
  std::map<std::pair<std::string, std::string>, TypeInfo, std::less<>> entries_;
};

} // namespace netcx
