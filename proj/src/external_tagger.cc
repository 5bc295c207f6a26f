#include "tagimpact/external_tagger.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

constexpr std::string_view kInPlaceholder = "{in}";
constexpr std::string_view kOutPlaceholder = "{out}";

// A file created with mkstemp and removed when the object dies.
class ScratchFile {
 public:
  explicit ScratchFile(const std::filesystem::path &dir, const char *stem) {
    std::string pattern = (dir / (std::string(stem) + "-XXXXXX")).string();
    int fd = ::mkstemp(pattern.data());
    if (fd < 0) {
      throw TaggerProcessFailure("cannot create scratch file in " + dir.string());
    }
    ::close(fd);
    path_ = pattern;
  }
  ~ScratchFile() {
    std::error_code ignored;
    std::filesystem::remove(path_, ignored);
  }
  ScratchFile(const ScratchFile &) = delete;
  ScratchFile &operator=(const ScratchFile &) = delete;

  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

std::string shell_quote(const std::string &s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

std::string substitute(std::string text, std::string_view key,
                       const std::string &value) {
  for (std::size_t pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

// Runs `/bin/sh -c command`, optionally with stdin/stdout redirected to files.
void run_command(const std::string &command, const std::string *stdin_path,
                 const std::string *stdout_path, double timeout_seconds) {
  pid_t pid = ::fork();
  if (pid < 0) throw TaggerProcessFailure("fork failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    if (stdin_path) {
      int fd = ::open(stdin_path->c_str(), O_RDONLY);
      if (fd < 0 || ::dup2(fd, STDIN_FILENO) < 0) ::_exit(126);
      ::close(fd);
    }
    if (stdout_path) {
      int fd = ::open(stdout_path->c_str(), O_WRONLY | O_TRUNC);
      if (fd < 0 || ::dup2(fd, STDOUT_FILENO) < 0) ::_exit(126);
      ::close(fd);
    }
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);

  using Clock = std::chrono::steady_clock;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(timeout_seconds));
  int status = 0;
  for (;;) {
    pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) throw TaggerProcessFailure("waitpid failed");
    if (Clock::now() >= deadline) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      throw TaggerProcessFailure("tagger timed out after " +
                                 std::to_string(timeout_seconds) + "s: " + command);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (WIFSIGNALED(status)) {
    throw TaggerProcessFailure("tagger killed by signal " +
                               std::to_string(WTERMSIG(status)) + ": " + command);
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw TaggerProcessFailure("tagger exited with status " +
                               std::to_string(WEXITSTATUS(status)) + ": " + command);
  }
}

}  // namespace

void ExternalTaggerConfig::validate() const {
  if (command.empty()) throw InvalidArgument("external tagger: empty command");
  if (io_mode == IoMode::kTempFile &&
      (command.find(kInPlaceholder) == std::string::npos ||
       command.find(kOutPlaceholder) == std::string::npos)) {
    throw InvalidArgument(
        "external tagger: temp-file mode needs {in} and {out} in the command");
  }
  if (timeout_seconds <= 0) throw InvalidArgument("external tagger: bad timeout");
}

std::pair<std::string, PosTag> parse_word_tag(std::string_view token) {
  std::size_t sep = token.rfind('_');
  if (sep == std::string_view::npos || sep == 0 || sep + 1 == token.size()) {
    throw FormatError("expected word_TAG, got '" + std::string(token) + "'");
  }
  return {std::string(token.substr(0, sep)), parse_tag(token.substr(sep + 1))};
}

std::vector<TaggedSentence> tag_via_external(
    const std::vector<TokenizedSentence> &sentences,
    const ExternalTaggerConfig &config) {
  if (sentences.empty()) {
    throw InvalidArgument("external tagger: no sentences to tag");
  }
  config.validate();

  ScratchFile input(config.scratch_dir, "tagimpact-in");
  ScratchFile output(config.scratch_dir, "tagimpact-out");
  {
    std::ofstream out(input.path());
    for (const TokenizedSentence &s : sentences) {
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        if (i) out << ' ';
        out << s.tokens[i];
      }
      out << '\n';
    }
    if (!out) throw TaggerProcessFailure("cannot write " + input.path());
  }

  if (config.io_mode == ExternalTaggerConfig::IoMode::kTempFile) {
    std::string command = substitute(config.command, kInPlaceholder,
                                     shell_quote(input.path()));
    command = substitute(command, kOutPlaceholder, shell_quote(output.path()));
    run_command(command, nullptr, nullptr, config.timeout_seconds);
  } else {
    run_command(config.command, &input.path(), &output.path(),
                config.timeout_seconds);
  }

  std::ifstream in(output.path());
  std::vector<TaggedSentence> tagged;
  tagged.reserve(sentences.size());
  std::string line;
  while (tagged.size() < sentences.size() && std::getline(in, line)) {
    const TokenizedSentence &src = sentences[tagged.size()];
    std::istringstream fields(line);
    TaggedSentence s;
    s.source = src.source;
    s.words = src.tokens;
    std::string token;
    while (fields >> token) s.tags.push_back(parse_word_tag(token).second);
    if (s.tags.size() != src.tokens.size()) {
      throw TokenCountMismatch(
          "tagger returned " + std::to_string(s.tags.size()) + " tokens for a " +
          std::to_string(src.tokens.size()) + "-token sentence (line " +
          std::to_string(tagged.size() + 1) + ")");
    }
    tagged.push_back(std::move(s));
  }
  if (tagged.size() != sentences.size()) {
    throw TokenCountMismatch("tagger returned " + std::to_string(tagged.size()) +
                             " lines for " + std::to_string(sentences.size()) +
                             " sentences");
  }
  return tagged;
}

}  // namespace tagimpact
