// SPDX-License-Identifier: Apache-2.0

#include "triad/evaluators.hpp"

#include <algorithm>
#include <cerrno>
#include <csignal>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "triad/error.hpp"

namespace triad {

namespace {

std::string join_floats(const std::vector<double>& xs)
{
    std::ostringstream line;
    line.precision(17);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            line << ' ';
        }
        line << xs[i];
    }
    line << '\n';
    return line.str();
}

// Run argv once: write `input` to its stdin, return everything it printed.
std::string run_child(const std::vector<std::string>& argv, const std::string& input)
{
    static std::once_flag sigpipe_once;
    std::call_once(sigpipe_once, [] { ::signal(SIGPIPE, SIG_IGN); });

    int in_pipe[2];
    int out_pipe[2];
    if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0) {
        throw EvalError("subprocess evaluator: pipe() failed");
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        throw EvalError("subprocess evaluator: fork() failed");
    }
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        std::vector<char*> args;
        args.reserve(argv.size() + 1);
        for (const std::string& a : argv) {
            args.push_back(const_cast<char*>(a.c_str()));
        }
        args.push_back(nullptr);
        ::execvp(args[0], args.data());
        _exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);

    std::size_t off = 0;
    while (off < input.size()) {
        const ssize_t n = ::write(in_pipe[1], input.data() + off, input.size() - off);
        if (n <= 0) {
            break; // child may legitimately ignore stdin
        }
        off += static_cast<std::size_t>(n);
    }
    ::close(in_pipe[1]);

    std::string output;
    char buf[4096];
    for (;;) {
        const ssize_t n = ::read(out_pipe[0], buf, sizeof buf);
        if (n <= 0) {
            break;
        }
        output.append(buf, static_cast<std::size_t>(n));
    }
    ::close(out_pipe[0]);

    int status = 0;
    ::waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        throw EvalError("subprocess evaluator exited with a failure status");
    }
    return output;
}

} // namespace

Evaluator make_linear()
{
    return Evaluator{1, [](const std::vector<double>& x) {
                         return std::vector<double>{x.empty() ? 0.0 : x[0]};
                     }};
}

Evaluator make_quadratic_offcenter()
{
    return Evaluator{1, [](const std::vector<double>& x) {
                         double s = 0.0;
                         for (const double c : x) {
                             const double d = c - 1.0 / 3.0;
                             s += d * d;
                         }
                         return std::vector<double>{s};
                     }};
}

Evaluator make_constant(double value)
{
    return Evaluator{1, [value](const std::vector<double>&) {
                         return std::vector<double>{value};
                     }};
}

Evaluator make_subprocess(std::vector<std::string> argv, int arity)
{
    if (argv.empty()) {
        throw ConfigError("subprocess evaluator requires a non-empty argv");
    }
    if (arity < 1) {
        throw ConfigError("evaluator arity must be >= 1");
    }
    return Evaluator{arity, [argv = std::move(argv), arity](const std::vector<double>& x) {
                         const std::string out = run_child(argv, join_floats(x));
                         // strtod so that "nan" and "inf" parse; the database
                         // layer is what rejects non-finite values.
                         std::vector<double> values;
                         const char* p = out.c_str();
                         while (*p != '\0') {
                             if (std::isspace(static_cast<unsigned char>(*p))) {
                                 ++p;
                                 continue;
                             }
                             char* end = nullptr;
                             const double v = std::strtod(p, &end);
                             if (end == p) {
                                 throw EvalError(
                                     "subprocess evaluator printed non-numeric output");
                             }
                             values.push_back(v);
                             p = end;
                         }
                         if (static_cast<int>(values.size()) < arity) {
                             throw EvalError("subprocess evaluator printed " +
                                             std::to_string(values.size()) +
                                             " values, expected " + std::to_string(arity));
                         }
                         values.resize(static_cast<std::size_t>(arity));
                         return values;
                     }};
}

const std::vector<std::string>& builtin_evaluator_names()
{
    static const std::vector<std::string> names = {
        "linear", "quadratic-offcenter", "constant", "subprocess"};
    return names;
}

Evaluator make_evaluator(const EvaluatorSpec& spec)
{
    if (spec.name == "linear") {
        return make_linear();
    }
    if (spec.name == "quadratic-offcenter") {
        return make_quadratic_offcenter();
    }
    if (spec.name == "constant") {
        return make_constant(spec.value);
    }
    if (spec.name == "subprocess") {
        return make_subprocess(spec.argv, spec.arity);
    }
    std::string names;
    for (const std::string& n : builtin_evaluator_names()) {
        names += names.empty() ? n : ", " + n;
    }
    throw ConfigError("unknown evaluator '" + spec.name + "' (valid: " + names + ")");
}

} // namespace triad
