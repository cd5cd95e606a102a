#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric::cli {

enum class Format { Plain, Machine };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInvalid = 3;
inline constexpr int kPrecondition = 4;

// Raised for malformed arguments; exits with kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// key = value (plain) or key<TAB>value (machine), one per line.
class Report {
 public:
  Report(std::ostream& os, Format format) : os_(os), format_(format) {}
  void line(const std::string& key, const std::string& value);

 private:
  std::ostream& os_;
  Format format_;
};

void cmd_fan_info(const std::string& fan_path, Report& out);
void cmd_dl(const std::string& fan_path, const std::string& degree, std::ostream& out);
void cmd_dr(const std::string& fan_path, const std::string& degree, std::ostream& out);
void cmd_check(const std::string& fan_path, const std::string& module_path, Report& out);
void cmd_charvar(const std::string& fan_path, const std::string& module_path, bool charts,
                 bool saturate, Report& out);
void cmd_swap(const std::string& fan_path, const std::string& module_path, std::ostream& out);
void cmd_local(const std::string& fan_path, const std::string& cone, const std::string& p,
               const std::string& g, Report& out);

// Full command line; errors are reported on `err` and mapped to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
