#include "pebble/subprocess.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "pebble/util.hpp"

namespace pebble {

subprocess_result run_process(const std::vector<std::string>& argv, const std::string& log_path,
                              double timeout_seconds) {
    if (argv.empty()) throw solver_error("run_process: empty argument vector");

    const int log_fd =
        ::open(log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (log_fd < 0)
        throw solver_error("cannot open log file '" + log_path + "': " + std::strerror(errno));

    // A pipe reports exec failure back to the parent: it is O_CLOEXEC, so
    // a successful exec closes it silently, while a failed exec writes
    // errno before exiting.
    int exec_pipe[2];
    if (::pipe2(exec_pipe, O_CLOEXEC) != 0) {
        ::close(log_fd);
        throw solver_error(std::string("pipe2 failed: ") + std::strerror(errno));
    }

    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);

    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(log_fd);
        ::close(exec_pipe[0]);
        ::close(exec_pipe[1]);
        throw solver_error(std::string("fork failed: ") + std::strerror(errno));
    }

    if (pid == 0) {
        ::setpgid(0, 0);  // own process group, so a timeout kill reaps helpers too
        ::dup2(log_fd, STDOUT_FILENO);
        ::dup2(log_fd, STDERR_FILENO);
        ::execvp(cargv[0], cargv.data());
        const int err = errno;
        [[maybe_unused]] ssize_t n = ::write(exec_pipe[1], &err, sizeof(err));
        ::_exit(127);
    }

    ::close(log_fd);
    ::close(exec_pipe[1]);

    int exec_errno = 0;
    {
        const ssize_t n = ::read(exec_pipe[0], &exec_errno, sizeof(exec_errno));
        ::close(exec_pipe[0]);
        if (n == static_cast<ssize_t>(sizeof(exec_errno))) {
            ::waitpid(pid, nullptr, 0);
            throw solver_error("cannot execute '" + argv[0] + "': " + std::strerror(exec_errno));
        }
    }

    subprocess_result res;
    const auto start = std::chrono::steady_clock::now();
    int status = 0;
    while (true) {
        const pid_t r = ::waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0) throw solver_error(std::string("waitpid failed: ") + std::strerror(errno));
        if (timeout_seconds > 0) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (elapsed > timeout_seconds) {
                res.timed_out = true;
                ::kill(-pid, SIGKILL);
                ::kill(pid, SIGKILL);
                ::waitpid(pid, &status, 0);
                break;
            }
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(25));
    }

    if (!res.timed_out && WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);

    std::ifstream in(log_path, std::ios::binary);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        res.output = buf.str();
    }
    return res;
}

}  // namespace pebble
